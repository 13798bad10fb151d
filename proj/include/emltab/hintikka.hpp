#ifndef EMLTAB_HINTIKKA_HPP
#define EMLTAB_HINTIKKA_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "emltab/closure.hpp"
#include "emltab/kripke.hpp"
#include "emltab/label_set.hpp"
#include "emltab/tableau.hpp"

namespace emltab {

/// A raw structure whose states carry closure labels.
struct HintikkaStructure {
  std::shared_ptr<const ClosureIndex> closure;
  KripkeStructure frame{Flavor::RawCmaes};
  std::vector<LabelSet> labels;
  /// Tableau state each Hintikka state came from (empty when built from a
  /// model).
  std::vector<std::uint32_t> origin;
};

/// Live states of a final tableau; an edge labelled ~D{A}f puts the pair
/// into the relation for A.  Throws LogicError if the tableau is closed.
HintikkaStructure hintikka_from_tableau(const TableauGraph& final_graph);

/// Labels every state of m with the closure literals true there.
HintikkaStructure hintikka_from_model(const KripkeStructure& m, std::shared_ptr<const ClosureIndex> closure);

struct ConditionReport {
  const char* name;
  bool passed = true;
  std::string witness;  // first counterexample, if any
};

struct HintikkaReport {
  std::array<ConditionReport, 4> conditions{
      ConditionReport{"CH1", true, {}}, ConditionReport{"CH2", true, {}}, ConditionReport{"CH3", true, {}},
      ConditionReport{"CH4", true, {}}};
  bool ok() const;
  std::string summary() const;
};

/// Checks the four Hintikka conditions:
///   CH1  every label is fully expanded
///   CH2  each ~D{A}f at s has an A-successor containing ~f
///   CH3  along an A-edge, D{B}g membership agrees at both ends for B within A
///   CH4  each ~C{A}f at s reaches a state containing ~f along edges of
///        coalitions within A
HintikkaReport verify_hintikka(const HintikkaStructure& h);

/// Pseudo-model: for every coalition A in use, R{A} is the equivalence
/// closure of the union of the edge relations of all B containing A.
/// Valuations are the positive atoms of the labels.
KripkeStructure pseudo_model_from_hintikka(const HintikkaStructure& h);

}  // namespace emltab

#endif  // EMLTAB_HINTIKKA_HPP
