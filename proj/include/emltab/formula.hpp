// Formula AST for coalitional multi-agent epistemic logic with common and
// distributed knowledge.
//
// Formulas are hash-consed by a FormulaFactory: two structurally equal
// formulas built by the same factory share one node, so equality is a
// pointer comparison.  Handles stay valid for the lifetime of the factory.
//
// The core language has five constructors:
//   Atom    p
//   Not     ~f
//   And     f & g
//   Dist    D{A} f     (distributed knowledge of coalition A)
//   Common  C{A} f     (common knowledge of coalition A)
// Disjunction, implication, equivalence and K{a} are expanded on
// construction.

#ifndef EMLTAB_FORMULA_HPP
#define EMLTAB_FORMULA_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emltab {

using AgentId = std::uint8_t;
using AtomId = std::uint32_t;

inline constexpr std::size_t kMaxAgents = 32;

/// A set of agents stored as a 32-bit mask.  Coalitions used in formulas
/// are never empty; the empty value only appears as an accumulator.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static constexpr Coalition singleton(AgentId a) { return Coalition(std::uint32_t{1} << a); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(AgentId a) const { return (bits_ >> a) & 1U; }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Coalition other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }

  constexpr Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }

  /// Members in increasing id order.
  std::vector<AgentId> members() const;

  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class Op : std::uint8_t { Atom = 0, Not = 1, And = 2, Dist = 3, Common = 4 };

namespace detail {
struct Node {
  Op op;
  Coalition coalition;  // Dist / Common only
  AtomId atom;          // Atom only
  const Node* lhs;      // Not / Dist / Common body, And left
  const Node* rhs;      // And right
  std::uint32_t size;   // number of AST nodes
  std::uint32_t id;     // creation order within the factory
  const std::string* atom_name;
};
}  // namespace detail

class FormulaFactory;

/// Lightweight handle to an interned formula node.
class Formula {
 public:
  Formula() = default;

  bool valid() const { return node_ != nullptr; }
  Op op() const { return node_->op; }
  bool is(Op o) const { return node_->op == o; }

  AtomId atom() const { return node_->atom; }
  const std::string& atom_name() const { return *node_->atom_name; }
  Coalition coalition() const { return node_->coalition; }

  /// Operand of Not / Dist / Common, or left conjunct of And.
  Formula body() const { return Formula(node_->lhs); }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  std::uint32_t size() const { return node_->size; }
  std::uint32_t id() const { return node_->id; }

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

 private:
  friend class FormulaFactory;
  explicit Formula(const detail::Node* n) : node_(n) {}
  const detail::Node* node_ = nullptr;
};

/// Canonical total order: by size, then constructor tag, then recursively
/// by contents.  Atoms compare by name so the order does not depend on
/// interning order.
std::strong_ordering canonical_compare(Formula a, Formula b);

struct CanonicalLess {
  bool operator()(Formula a, Formula b) const { return canonical_compare(a, b) < 0; }
};

struct FormulaHash {
  std::size_t operator()(Formula f) const { return std::hash<std::uint32_t>{}(f.id()); }
};

class LogicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Owns formula nodes plus the agent and atom name tables of one problem.
class FormulaFactory {
 public:
  FormulaFactory() = default;
  FormulaFactory(const FormulaFactory&) = delete;
  FormulaFactory& operator=(const FormulaFactory&) = delete;
  FormulaFactory(FormulaFactory&&) = default;
  FormulaFactory& operator=(FormulaFactory&&) = default;

  /// Interns an agent name; throws LogicError past kMaxAgents.
  AgentId agent(std::string_view name);
  std::optional<AgentId> find_agent(std::string_view name) const;
  const std::string& agent_name(AgentId a) const { return agents_.at(a); }
  std::size_t agent_count() const { return agents_.size(); }

  AtomId atom_id(std::string_view name);
  std::optional<AtomId> find_atom(std::string_view name) const;
  const std::string& atom_name(AtomId a) const { return atoms_.at(a); }
  std::size_t atom_count() const { return atoms_.size(); }

  Coalition coalition(std::initializer_list<std::string_view> names);
  Coalition coalition(const std::vector<std::string>& names);
  std::string coalition_text(Coalition c) const;  // "a,b"

  Formula atom(std::string_view name);
  Formula neg(Formula f);
  Formula conj(Formula a, Formula b);
  Formula dist(Coalition c, Formula f);
  Formula common(Coalition c, Formula f);

  // Derived connectives, expanded into the core language.
  Formula disj(Formula a, Formula b);     // ~(~a & ~b)
  Formula implies(Formula a, Formula b);  // ~(a & ~b)
  Formula iff(Formula a, Formula b);      // (a -> b) & (b -> a)
  Formula knows(AgentId a, Formula f) { return dist(Coalition::singleton(a), f); }

  /// Conjunction of a non-empty list, folded to the left.
  Formula conj_all(const std::vector<Formula>& fs);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Key {
    Op op;
    std::uint32_t coalition;
    std::uint32_t atom;
    const detail::Node* lhs;
    const detail::Node* rhs;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  Formula intern(Op op, Coalition c, AtomId atom, Formula lhs, Formula rhs);

  std::deque<detail::Node> nodes_;
  std::unordered_map<Key, const detail::Node*, KeyHash> table_;
  std::vector<std::string> agents_;
  std::deque<std::string> atoms_;  // deque: stable addresses for Node::atom_name
  std::unordered_map<std::string, AgentId> agent_index_;
  std::unordered_map<std::string, AtomId> atom_index_;
};

/// All distinct subformulas of f (including f), in canonical order.
std::vector<Formula> subformulas(Formula f);

/// Agents mentioned anywhere in f.
Coalition agents_of(Formula f);

/// Atom ids mentioned anywhere in f, ascending.
std::vector<AtomId> atoms_of(Formula f);

}  // namespace emltab

#endif  // EMLTAB_FORMULA_HPP
