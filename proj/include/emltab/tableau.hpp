// Tableau decision procedure.
//
// The graph goes through three phases.  Construction alternates two rules
// starting from a single prestate holding the input set: SR turns a prestate
// into its cut-saturated expansions (states, joined by dashed edges) and DR
// gives each diamond ~D{A}f of a state a successor prestate (solid edge
// labelled with the diamond).  Prestate elimination then routes every solid
// edge straight to the states of its target prestate.  Finally states are
// removed when a diamond has no successor left (E1) or an eventuality
// ~C{A}f cannot be realized (E2), until nothing changes.  The input is
// satisfiable iff a surviving state contains all input formulas.

#ifndef EMLTAB_TABLEAU_HPP
#define EMLTAB_TABLEAU_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "emltab/closure.hpp"
#include "emltab/deadline.hpp"
#include "emltab/expansion.hpp"
#include "emltab/label_set.hpp"

namespace emltab {

enum class NodeKind : std::uint8_t { State, Prestate };

struct NodeId {
  NodeKind kind;
  std::uint32_t index;
  auto operator<=>(const NodeId&) const = default;
};

/// Solid edge from a state, labelled by a diamond literal of that state.
struct SolidEdge {
  std::uint32_t from;
  Literal chi;
  NodeId to;
};

enum class Phase : std::uint8_t { Pretableau, Initial, Final };
enum class ElimRule : std::uint8_t { E1, E2 };

const char* to_string(Phase p);
const char* to_string(ElimRule r);

struct Elimination {
  std::uint32_t state;
  ElimRule rule;
  std::optional<Literal> eventuality;  // E2 only
  std::uint32_t cycle;                 // 1-based elimination cycle
};

/// Node storage shared by all phases.  State and prestate labels are unique
/// per kind.  States are never physically deleted; elimination clears their
/// `alive` flag so indices stay stable across phases.
struct TableauGraph {
  TableauGraph(std::shared_ptr<const ClosureIndex> idx, CutMode m);

  const ClosureIndex& index() const { return *closure; }

  std::shared_ptr<const ClosureIndex> closure;
  CutMode mode;
  Phase phase = Phase::Pretableau;

  LabelSet input;  // the input set as a label

  std::vector<LabelSet> states;
  std::vector<bool> alive;
  std::vector<LabelSet> prestates;
  std::vector<std::vector<std::uint32_t>> dashed;  // prestate -> st(prestate)
  std::vector<bool> expanded;                      // SR applied, per prestate
  std::vector<SolidEdge> edges;
  std::vector<Elimination> log;
  std::uint32_t cycles = 0;  // elimination cycles run

  std::unordered_map<LabelSet, std::uint32_t, LabelSetHash> state_ids;
  std::unordered_map<LabelSet, std::uint32_t, LabelSetHash> prestate_ids;

  /// Returns the id of the state/prestate with this label, creating it if
  /// needed; the flag tells whether it was created.
  std::pair<std::uint32_t, bool> intern_state(const LabelSet& s);
  std::pair<std::uint32_t, bool> intern_prestate(const LabelSet& s);

  std::size_t alive_count() const;

  /// Solid edges leaving each state, grouped per source.
  std::vector<std::vector<SolidEdge>> out_edges() const;
};

/// Rule SR on prestate p.  Returns the ids of states created by this call.
std::vector<std::uint32_t> apply_sr(TableauGraph& t, std::uint32_t p, const Deadline& deadline = {});

/// Label of the prestate DR creates for diamond chi of the given label.
LabelSet dr_label(const ClosureIndex& index, const LabelSet& delta, Literal chi);

/// Rule DR on (state, chi).  Returns the target prestate id and whether it
/// was newly created.
std::pair<std::uint32_t, bool> apply_dr(TableauGraph& t, std::uint32_t state, Literal chi);

TableauGraph build_pretableau(std::shared_ptr<const ClosureIndex> index, CutMode mode,
                              const Deadline& deadline = {});

/// Rule PR: the initial tableau.  Prestates, dashed edges and the prestate
/// tables are dropped.
TableauGraph eliminate_prestates(const TableauGraph& pretableau);

/// Eventualities occurring in live states, in canonical order.
std::vector<Literal> eventualities(const TableauGraph& t);

/// States (among live ones) at which xi is realized, or which contain the
/// negated body of xi.
std::vector<bool> realization_marking(const TableauGraph& t, Literal xi);

/// Rules E1/E2 in dovetailed cycles until a whole cycle removes nothing.
TableauGraph eliminate_states(TableauGraph initial, const Deadline& deadline = {});

struct Stats {
  std::size_t ecl_size = 0;
  std::size_t prestates = 0;
  std::size_t states = 0;
  std::size_t root_states = 0;  // states of the input prestate
  std::size_t solid_edges = 0;
  std::size_t eliminated_e1 = 0;
  std::size_t eliminated_e2 = 0;
  std::size_t cycles = 0;
};

struct Verdict {
  bool sat = false;
  std::optional<std::uint32_t> witness;  // state index in the final graph
  bool diagnostic = false;                // produced in NoCut mode
  Stats stats;
};

/// All phases of one run plus the verdict.
struct TableauRun {
  TableauGraph pretableau;
  TableauGraph initial;
  TableauGraph final_graph;
  Verdict verdict;
};

TableauRun run_tableau(FormulaFactory& factory, const std::vector<Formula>& theta, CutMode mode,
                       const Deadline& deadline = {});

Verdict decide(FormulaFactory& factory, const std::vector<Formula>& theta, CutMode mode,
               const Deadline& deadline = {});

/// First live state containing the input set, if any.
std::optional<std::uint32_t> open_witness(const TableauGraph& final_graph);

}  // namespace emltab

#endif  // EMLTAB_TABLEAU_HPP
