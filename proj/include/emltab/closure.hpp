#ifndef EMLTAB_CLOSURE_HPP
#define EMLTAB_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "emltab/formula.hpp"

namespace emltab {

enum class FormulaKind : std::uint8_t { Literal, NegLiteral, Alpha, Beta, DiamondD };

const char* to_string(FormulaKind k);

/// Local decomposition of a formula.  For Alpha/Beta, `components` lists
/// the components in canonical order.  For DiamondD (~D{A}f) `coalition`
/// and `body` hold A and f.
struct FormulaClass {
  FormulaKind kind;
  std::vector<Formula> components;
  Coalition coalition;
  Formula body;
};

/// Syntactic classification.  Double negation is kept: ~~f is an Alpha
/// formula with the single component f.
FormulaClass classify(Formula f, FormulaFactory& factory);

/// Least set containing f that is closed under components and contains ~g
/// whenever it contains ~D{A}g.  Canonical order.
std::vector<Formula> closure(Formula f, FormulaFactory& factory);
std::vector<Formula> closure(const std::vector<Formula>& fs, FormulaFactory& factory);

/// A signed formula over the extended closure.  `base()` indexes a formula
/// without a leading negation; `negative()` says whether the literal is its
/// negation.  Stacked negations are collapsed by parity.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(std::uint32_t base, bool negative) : code_(base << 1 | (negative ? 1U : 0U)) {}
  static constexpr Literal from_code(std::uint32_t c) {
    Literal l;
    l.code_ = c;
    return l;
  }

  constexpr std::uint32_t base() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1U) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Literal operator~() const { return from_code(code_ ^ 1U); }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// Extended closure of an input set, indexed for the tableau.
///
/// Bases are every subformula of the input that is not a negation, together
/// with D{a}C{A}f for each subformula C{A}f and a in A.  Both signs of every
/// base are present, so the literal count is twice the base count.  Bases
/// are numbered in canonical formula order.
class ClosureIndex {
 public:
  ClosureIndex(const std::vector<Formula>& theta, FormulaFactory& factory);

  const FormulaFactory& factory() const { return *factory_; }
  const std::vector<Formula>& inputs() const { return inputs_; }

  std::size_t base_count() const { return bases_.size(); }
  std::size_t size() const { return 2 * bases_.size(); }

  Formula base(std::uint32_t b) const { return bases_[b]; }
  Op base_op(std::uint32_t b) const { return bases_[b].op(); }

  std::optional<Literal> find(Formula f) const;
  /// Throws LogicError when f is outside the closure.
  Literal literal(Formula f) const;
  Formula formula(Literal l) const { return lit_formula_[l.code()]; }

  FormulaKind kind(Literal l) const { return kind_[l.code()]; }
  std::span<const Literal> components(Literal l) const { return components_[l.code()]; }
  bool is_eventuality(Literal l) const { return l.negative() && base_op(l.base()) == Op::Common; }
  bool is_diamond(Literal l) const { return l.negative() && base_op(l.base()) == Op::Dist; }

  /// Coalition of a Dist/Common base.
  Coalition coalition(std::uint32_t b) const { return bases_[b].coalition(); }
  /// Operand of a Dist/Common base as a literal.
  Literal body(std::uint32_t b) const { return body_[b]; }

  /// Dist/Common bases among the syntactic subformulas of base b (b itself
  /// included when it is one), ascending.
  std::span<const std::uint32_t> dc_subformulas(std::uint32_t b) const { return dc_subs_[b]; }

  /// Position of a literal in the canonical order of literal formulas.
  std::uint32_t rank(Literal l) const { return rank_[l.code()]; }
  Literal by_rank(std::uint32_t r) const { return by_rank_[r]; }

  /// Agents occurring in the input; empty for purely propositional input.
  Coalition agents() const { return agents_; }
  /// Sum of AST node counts of the inputs.
  std::size_t input_size() const { return input_size_; }

  std::string print(Literal l) const;

 private:
  Literal strip(Formula f) const;

  const FormulaFactory* factory_;
  std::vector<Formula> inputs_;
  std::vector<Formula> bases_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> base_index_;
  std::vector<Formula> lit_formula_;
  std::vector<FormulaKind> kind_;
  std::vector<std::vector<Literal>> components_;
  std::vector<Literal> body_;
  std::vector<std::vector<std::uint32_t>> dc_subs_;
  std::vector<std::uint32_t> rank_;
  std::vector<Literal> by_rank_;
  Coalition agents_;
  std::size_t input_size_ = 0;
};

ClosureIndex extended_closure(const std::vector<Formula>& theta, FormulaFactory& factory);

}  // namespace emltab

template <>
struct std::hash<emltab::Literal> {
  std::size_t operator()(emltab::Literal l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};

#endif  // EMLTAB_CLOSURE_HPP
