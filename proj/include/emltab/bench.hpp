#ifndef EMLTAB_BENCH_HPP
#define EMLTAB_BENCH_HPP

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "emltab/expansion.hpp"

namespace emltab {

struct BenchRecord {
  std::string formula;
  CutMode mode = CutMode::Restricted;
  std::string verdict;  // sat, unsat, timeout or error
  std::size_t states = 0;
  std::size_t root_states = 0;
  std::size_t eliminated_e1 = 0;
  std::size_t eliminated_e2 = 0;
  std::size_t ecl_size = 0;
  double millis = 0;
  std::string error;
};

struct BenchOptions {
  std::vector<CutMode> modes{CutMode::Restricted, CutMode::Unrestricted};
  std::chrono::milliseconds timeout{10000};
  unsigned threads = 1;
};

struct ModeTotals {
  std::size_t runs = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t timeouts = 0;
  std::size_t errors = 0;
  std::size_t states = 0;
  double millis = 0;
};

struct BenchReport {
  /// Formula-major, modes in option order.
  std::vector<BenchRecord> records;
  std::map<CutMode, ModeTotals> totals;
  /// Formulas on which Restricted and Unrestricted verdicts differ.
  std::vector<std::string> disagreements;

  std::string csv() const;
  std::string table() const;
};

inline constexpr const char* kBenchCsvHeader = "formula,mode,verdict,states,eliminated_e1,eliminated_e2,ecl_size,millis";

/// Parses and decides one formula with its own factory.
BenchRecord solve_one(const std::string& text, CutMode mode, std::chrono::milliseconds timeout);

BenchReport run_bench(const std::vector<std::string>& corpus, const BenchOptions& options);

}  // namespace emltab

#endif  // EMLTAB_BENCH_HPP
