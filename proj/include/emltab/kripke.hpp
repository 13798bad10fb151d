#ifndef EMLTAB_KRIPKE_HPP
#define EMLTAB_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "emltab/formula.hpp"

namespace emltab {

using StateSet = boost::dynamic_bitset<std::uint64_t>;

/// Binary relation over states 0..n-1 as one bit row per state.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, StateSet(n)) {}

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  /// Equivalence relation whose classes are the given blocks.  States
  /// outside every block are related only to themselves.
  static Relation from_blocks(std::size_t n, const std::vector<std::vector<std::uint32_t>>& blocks);

  std::size_t size() const { return rows_.size(); }
  bool test(std::uint32_t s, std::uint32_t t) const { return rows_[s].test(t); }
  void set(std::uint32_t s, std::uint32_t t) { rows_[s].set(t); }
  const StateSet& successors(std::uint32_t s) const { return rows_[s]; }

  Relation& operator|=(const Relation& o);
  Relation& operator&=(const Relation& o);
  bool subset_of(const Relation& o) const;
  bool operator==(const Relation&) const = default;

  bool reflexive() const;
  bool symmetric() const;
  bool transitive() const;
  bool equivalence() const { return reflexive() && symmetric() && transitive(); }

  /// Warshall's algorithm on bit rows.
  Relation transitive_closure() const;
  Relation reflexive_transitive_closure() const;
  Relation equivalence_closure() const;

  /// Equivalence classes, each sorted, ordered by smallest member.
  /// Only meaningful for equivalence relations.
  std::vector<std::vector<std::uint32_t>> blocks() const;

 private:
  std::vector<StateSet> rows_;
};

/// Which conditions tie coalition relations together.
///   Cmaem        per-agent equivalences; R{A} is their intersection
///   PseudoCmaem  explicit equivalences per coalition, monotone in A;
///                coalitions without one fall back to the intersection
///   RawCmaes     explicit arbitrary relations; missing ones are empty
enum class Flavor : std::uint8_t { Cmaem, PseudoCmaem, RawCmaes };

const char* to_string(Flavor f);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite Kripke structure over the agents and atoms of a FormulaFactory.
class KripkeStructure {
 public:
  explicit KripkeStructure(Flavor flavor = Flavor::Cmaem, std::size_t states = 0);

  Flavor flavor() const { return flavor_; }
  std::size_t size() const { return names_.size(); }

  std::uint32_t add_state(std::string name);
  const std::string& name(std::uint32_t s) const { return names_[s]; }
  std::optional<std::uint32_t> find_state(std::string_view name) const;

  /// Individual knowledge of one agent, as an equivalence relation.
  void set_agent(AgentId a, Relation r);
  /// Explicit relation for a coalition (Pseudo and Raw flavors).
  void set_coalition(Coalition c, Relation r);

  const std::map<AgentId, Relation>& agent_relations() const { return agents_; }
  const std::map<Coalition, Relation>& coalition_relations() const { return coalitions_; }

  void set_atom(std::uint32_t s, AtomId p, bool value = true);
  bool holds(std::uint32_t s, AtomId p) const;
  /// Atoms true at s, ascending.
  std::vector<AtomId> true_atoms(std::uint32_t s) const;

  /// The relation used for D{A}.  Throws ModelError when the flavor needs
  /// an agent relation that is missing.
  Relation relation(Coalition a) const;
  /// Reflexive-transitive closure of the union of relation(B) over the
  /// coalitions B within A that the structure knows about.
  Relation common_relation(Coalition a) const;

 private:
  Flavor flavor_;
  std::vector<std::string> names_;
  std::map<AgentId, Relation> agents_;
  std::map<Coalition, Relation> coalitions_;
  std::vector<std::vector<AtomId>> valuation_;  // sorted per state
};

/// States at which f holds.  Atoms the structure never mentions are false.
StateSet evaluate(const KripkeStructure& m, Formula f);
bool check(const KripkeStructure& m, std::uint32_t s, Formula f);

/// States reachable from s by steps of coalitions within A (s included).
StateSet a_reachable(const KripkeStructure& m, std::uint32_t s, Coalition a);

/// Text format, one declaration per line, '#' starts a comment:
///   states: s0 s1 s2
///   agent a: {s0 s1} {s2}
///   coalition a,b: {s0} {s1 s2}      (pseudo-models only)
///   val s0: p q
/// States left out of an agent's blocks are singleton classes.
KripkeStructure read_model(std::string_view text, FormulaFactory& factory);
std::string write_model(const KripkeStructure& m, const FormulaFactory& factory);

}  // namespace emltab

#endif  // EMLTAB_KRIPKE_HPP
