#ifndef EMLTAB_ORACLE_HPP
#define EMLTAB_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "emltab/deadline.hpp"
#include "emltab/kripke.hpp"

namespace emltab {

struct OracleHit {
  KripkeStructure model;
  std::uint32_t state;
};

inline constexpr std::size_t kOracleMaxStates = 4;
inline constexpr std::size_t kOracleMaxAtoms = 2;

/// Exhaustive small-model search.  Tries every structure with 1..max_states
/// states, every partition per agent of theta and every valuation of the
/// first kOracleMaxAtoms atoms of theta (further atoms stay false).
/// Coalition relations are the intersections of the agents' relations.
/// Returns the first model and state satisfying theta.
std::optional<OracleHit> brute_force_sat(Formula theta, std::size_t max_states, const Deadline& deadline = {});

}  // namespace emltab

#endif  // EMLTAB_ORACLE_HPP
