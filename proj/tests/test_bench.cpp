#include <gtest/gtest.h>

#include <sstream>

#include "emltab/bench.hpp"
#include "emltab/generator.hpp"

using namespace emltab;
using namespace std::chrono_literals;

TEST(Bench, EmptyCorpus) {
  BenchReport rep = run_bench({}, BenchOptions{});
  EXPECT_TRUE(rep.records.empty());
  EXPECT_TRUE(rep.disagreements.empty());
  EXPECT_EQ(rep.csv(), std::string(kBenchCsvHeader) + "\n");
  EXPECT_NE(rep.table().find("mode"), std::string::npos);
}

TEST(Bench, SolveOne) {
  BenchRecord sat = solve_one("~C{a,b}p & q", CutMode::Restricted, 10s);
  EXPECT_EQ(sat.verdict, "sat");
  EXPECT_GT(sat.states, 0u);
  EXPECT_GT(sat.ecl_size, 0u);
  BenchRecord unsat = solve_one("~D{a,c}C{a,b}p & C{a,b}(p & q)", CutMode::Restricted, 10s);
  EXPECT_EQ(unsat.verdict, "unsat");
  EXPECT_EQ(unsat.eliminated_e1, 1u);
  EXPECT_EQ(unsat.eliminated_e2, 4u);
  BenchRecord bad = solve_one("p &", CutMode::Restricted, 10s);
  EXPECT_EQ(bad.verdict, "error");
  EXPECT_FALSE(bad.error.empty());
  BenchRecord late = solve_one("~C{a,b,c}(D{a}p & ~D{b,c}q) & C{a,b}~C{c}p", CutMode::Unrestricted, 0ms);
  EXPECT_EQ(late.verdict, "timeout");
}

TEST(Bench, RootStatesShrinkUnderRestrictedCuts) {
  BenchOptions o;
  BenchReport rep = run_bench({"~C{a,b}D{a}p"}, o);
  ASSERT_EQ(rep.records.size(), 2u);
  EXPECT_EQ(rep.records[0].mode, CutMode::Restricted);
  EXPECT_EQ(rep.records[1].mode, CutMode::Unrestricted);
  EXPECT_LT(rep.records[0].root_states, rep.records[1].root_states);
}

TEST(Bench, CsvLayout) {
  BenchOptions o;
  o.modes = {CutMode::Restricted, CutMode::NoCut};
  BenchReport rep = run_bench({"p", "~D{a,b}p & ~D{a,c}~D{a}p"}, o);
  std::istringstream in(rep.csv());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("\"p\",restricted,sat,1,0,0,", 0), 0u) << rows[0];
  EXPECT_EQ(rows[1].rfind("\"p\",no-cut,sat,", 0), 0u) << rows[1];
  EXPECT_NE(rows[2].find(",restricted,unsat,"), std::string::npos);
  EXPECT_NE(rows[3].find(",no-cut,sat,"), std::string::npos);
  // Disagreements are only tracked between the two sound modes.
  EXPECT_TRUE(rep.disagreements.empty());
  EXPECT_EQ(rep.totals.at(CutMode::NoCut).sat, 2u);
}

TEST(Bench, ThreadsDoNotChangeResults) {
  GenParams p;
  p.max_depth = 3;
  auto corpus = generate_corpus(p, 60);
  BenchOptions one;
  BenchOptions four;
  four.threads = 4;
  BenchReport a = run_bench(corpus, one);
  BenchReport b = run_bench(corpus, four);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].formula, b.records[i].formula);
    EXPECT_EQ(a.records[i].verdict, b.records[i].verdict);
    EXPECT_EQ(a.records[i].states, b.records[i].states);
  }
  EXPECT_TRUE(a.disagreements.empty());
  EXPECT_EQ(a.totals.at(CutMode::Restricted).runs, 60u);
}
