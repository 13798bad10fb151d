#include "emltab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace emltab {

namespace {

// All set partitions of n elements as restricted-growth strings.
std::vector<std::vector<std::uint32_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    // Next restricted-growth string: bump the rightmost position that may
    // grow, reset everything after it.
    std::size_t i = n;
    bool advanced = false;
    while (i-- > 1) {
      std::uint32_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

Relation relation_of(const std::vector<std::uint32_t>& rgs) {
  Relation r(rgs.size());
  for (std::uint32_t s = 0; s < rgs.size(); ++s) {
    for (std::uint32_t t = 0; t < rgs.size(); ++t) {
      if (rgs[s] == rgs[t]) r.set(s, t);
    }
  }
  return r;
}

}  // namespace

std::optional<OracleHit> brute_force_sat(Formula theta, std::size_t max_states, const Deadline& deadline) {
  if (max_states == 0 || max_states > kOracleMaxStates) {
    throw std::invalid_argument("oracle bound must be between 1 and 4 states");
  }
  const std::vector<AgentId> agents = agents_of(theta).members();
  std::vector<AtomId> atoms = atoms_of(theta);
  if (atoms.size() > kOracleMaxAtoms) atoms.resize(kOracleMaxAtoms);

  for (std::size_t n = 1; n <= max_states; ++n) {
    const auto parts = partitions(n);
    const std::size_t valuations = std::size_t{1} << (n * atoms.size());
    // Mixed-radix counter over one partition per agent.
    std::vector<std::size_t> choice(agents.size(), 0);
    while (true) {
      deadline.check();
      KripkeStructure m(Flavor::Cmaem, n);
      for (std::size_t i = 0; i < agents.size(); ++i) m.set_agent(agents[i], relation_of(parts[choice[i]]));
      for (std::size_t v = 0; v < valuations; ++v) {
        for (std::uint32_t s = 0; s < n; ++s) {
          for (std::size_t k = 0; k < atoms.size(); ++k) m.set_atom(s, atoms[k], (v >> (s * atoms.size() + k)) & 1U);
        }
        StateSet sat = evaluate(m, theta);
        if (auto s = sat.find_first(); s != StateSet::npos) return OracleHit{m, static_cast<std::uint32_t>(s)};
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == parts.size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace emltab
