#include "emltab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "emltab/parser.hpp"
#include "emltab/tableau.hpp"

namespace emltab {

BenchRecord solve_one(const std::string& text, CutMode mode, std::chrono::milliseconds timeout) {
  BenchRecord rec;
  rec.formula = text;
  rec.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  try {
    FormulaFactory factory;
    Formula f = parse(text, factory);
    Deadline deadline(timeout);
    Verdict v = decide(factory, {f}, mode, deadline);
    rec.verdict = v.sat ? "sat" : "unsat";
    rec.states = v.stats.states;
    rec.root_states = v.stats.root_states;
    rec.eliminated_e1 = v.stats.eliminated_e1;
    rec.eliminated_e2 = v.stats.eliminated_e2;
    rec.ecl_size = v.stats.ecl_size;
  } catch (const TimeoutError&) {
    rec.verdict = "timeout";
  } catch (const std::exception& e) {
    rec.verdict = "error";
    rec.error = e.what();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

BenchReport run_bench(const std::vector<std::string>& corpus, const BenchOptions& options) {
  BenchReport rep;
  const std::size_t per = options.modes.size();
  const std::size_t jobs = corpus.size() * per;
  rep.records.resize(jobs);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      rep.records[j] = solve_one(corpus[j / per], options.modes[j % per], options.timeout);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const BenchRecord& r : rep.records) {
    ModeTotals& t = rep.totals[r.mode];
    ++t.runs;
    t.states += r.states;
    t.millis += r.millis;
    if (r.verdict == "sat") ++t.sat;
    else if (r.verdict == "unsat") ++t.unsat;
    else if (r.verdict == "timeout") ++t.timeouts;
    else ++t.errors;
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const BenchRecord* restricted = nullptr;
    const BenchRecord* unrestricted = nullptr;
    for (std::size_t k = 0; k < per; ++k) {
      const BenchRecord& r = rep.records[i * per + k];
      if (r.mode == CutMode::Restricted) restricted = &r;
      if (r.mode == CutMode::Unrestricted) unrestricted = &r;
    }
    if (!restricted || !unrestricted) continue;
    auto decided = [](const BenchRecord* r) { return r->verdict == "sat" || r->verdict == "unsat"; };
    if (decided(restricted) && decided(unrestricted) && restricted->verdict != unrestricted->verdict) {
      rep.disagreements.push_back(corpus[i]);
    }
  }
  return rep;
}

std::string BenchReport::csv() const {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  char ms[32];
  for (const BenchRecord& r : records) {
    std::snprintf(ms, sizeof ms, "%.3f", r.millis);
    out << '"' << r.formula << "\"," << to_string(r.mode) << ',' << r.verdict << ',' << r.states << ','
        << r.eliminated_e1 << ',' << r.eliminated_e2 << ',' << r.ecl_size << ',' << ms << '\n';
  }
  return out.str();
}

std::string BenchReport::table() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-13s %6s %6s %6s %8s %6s %10s %12s\n", "mode", "runs", "sat", "unsat", "timeout",
                "error", "states", "millis");
  out << line;
  for (const auto& [mode, t] : totals) {
    std::snprintf(line, sizeof line, "%-13s %6zu %6zu %6zu %8zu %6zu %10zu %12.1f\n", to_string(mode), t.runs, t.sat,
                  t.unsat, t.timeouts, t.errors, t.states, t.millis);
    out << line;
  }
  if (!disagreements.empty()) {
    out << "verdict disagreements between restricted and unrestricted: " << disagreements.size() << '\n';
    for (const auto& f : disagreements) out << "  " << f << '\n';
  }
  return out.str();
}

}  // namespace emltab
