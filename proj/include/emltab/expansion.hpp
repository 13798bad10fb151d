#ifndef EMLTAB_EXPANSION_HPP
#define EMLTAB_EXPANSION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "emltab/closure.hpp"
#include "emltab/deadline.hpp"
#include "emltab/label_set.hpp"

namespace emltab {

/// Which D/C formulas get a cut (branch on f versus ~f) during expansion.
///   Restricted    only those licensed by conditions C1/C2 against the
///                 diamonds of the set
///   Unrestricted  every undecided D/C subformula of a member
///   NoCut         none; unsound, for diagnostics only
enum class CutMode { Restricted, Unrestricted, NoCut };

const char* to_string(CutMode m);
std::optional<CutMode> parse_cut_mode(std::string_view s);

using Family = std::vector<LabelSet>;

/// All full expansions of gamma, deduplicated and in label_less order.
Family full_expansions(const ClosureIndex& index, const LabelSet& gamma, const Deadline& deadline = {});

/// Undecided D/C bases of phi eligible for a cut, ascending.
std::vector<std::uint32_t> cut_targets(const ClosureIndex& index, const LabelSet& phi, CutMode mode);

/// Same as cut_targets, returning the positive formulas.
std::vector<Formula> cut_target_formulas(const ClosureIndex& index, const LabelSet& phi, CutMode mode);

/// All cut-saturated expansions of gamma.  With NoCut this equals
/// full_expansions.
Family cs_expansions(const ClosureIndex& index, const LabelSet& gamma, CutMode mode,
                     const Deadline& deadline = {});

/// True when s is closed under alpha components and has a component of
/// every beta member.
bool fully_expanded(const ClosureIndex& index, const LabelSet& s);

}  // namespace emltab

#endif  // EMLTAB_EXPANSION_HPP
