#ifndef EMLTAB_GENERATOR_HPP
#define EMLTAB_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "emltab/formula.hpp"

namespace emltab {

/// Relative weights of the constructors used above depth 0.
struct ConnectiveWeights {
  unsigned atom = 1;
  unsigned neg = 2;
  unsigned conj = 2;
  unsigned dist = 3;
  unsigned common = 3;
};

struct GenParams {
  int max_depth = 4;
  std::vector<std::string> agents{"a", "b", "c"};
  std::vector<std::string> atoms{"p", "q"};
  ConnectiveWeights weights{};
  std::uint64_t seed = 42;
};

/// Deterministic random formula source: equal params give equal sequences.
class FormulaGenerator {
 public:
  FormulaGenerator(GenParams params, FormulaFactory& factory);

  Formula next();

 private:
  Formula gen(int depth);
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  GenParams params_;
  FormulaFactory& factory_;
  std::mt19937_64 rng_;
};

/// Printed formulas; each one is generated independently of the factory
/// that later parses it.
std::vector<std::string> generate_corpus(const GenParams& params, std::size_t count);

/// ~(C{A}f <-> (f & D{a1}C{A}f & ... & D{an}C{A}f)), unsatisfiable for every A and f.
Formula fixpoint_family(Coalition a, Formula f, FormulaFactory& factory);

}  // namespace emltab

#endif  // EMLTAB_GENERATOR_HPP
