#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "emltab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = emltab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(EMLTAB_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "emltab_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CheckVerdicts) {
  Result sat = run({"check", "~C{a,b}p & q"});
  EXPECT_EQ(sat.code, 0);
  EXPECT_EQ(sat.out.rfind("sat\n", 0), 0u);
  EXPECT_NE(sat.out.find("witness: S"), std::string::npos);

  Result unsat = run({"check", "--file", fixture("stuck_set.txt")});
  EXPECT_EQ(unsat.code, 1);
  EXPECT_EQ(unsat.out.rfind("unsat\n", 0), 0u);
  EXPECT_NE(unsat.out.find("eliminated 1 (E1) 4 (E2)"), std::string::npos);
}

TEST(Cli, CheckJson) {
  Result r = run({"check", "--json", "--trace", "--file", fixture("stuck_set.txt")});
  ASSERT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "unsat");
  EXPECT_EQ(j["mode"], "restricted");
  EXPECT_FALSE(j["diagnostic"].get<bool>());
  EXPECT_TRUE(j["witness_label"].is_null());
  EXPECT_EQ(j["stats"]["prestates"], 5);
  EXPECT_EQ(j["stats"]["eliminated_e2"], 4);
  ASSERT_EQ(j["trace"].size(), 5u);
  EXPECT_EQ(j["trace"][0]["rule"], "E2");
  EXPECT_EQ(j["trace"][0]["eventuality"], "~C{a,b}p");
  EXPECT_EQ(j["trace"][4]["rule"], "E1");

  Result s = run({"check", "--json", "--model", "p & ~D{a}p"});
  ASSERT_EQ(s.code, 0);
  auto k = nlohmann::json::parse(s.out);
  EXPECT_EQ(k["verdict"], "sat");
  EXPECT_TRUE(k["witness_label"].is_array());
  EXPECT_TRUE(k["model"].is_string());
  EXPECT_EQ(k["model_state"].get<std::string>().front(), 's');
}

TEST(Cli, NoCutWarns) {
  Result r = run({"check", "--mode", "no-cut", "~D{a,b}p & ~D{a,c}~D{a}p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: no-cut mode is unsound"), std::string::npos);
  Result q = run({"check", "--mode", "unrestricted", "~D{a,b}p & ~D{a,c}~D{a}p"});
  EXPECT_EQ(q.code, 1);
  EXPECT_TRUE(q.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--mode", "sideways", "p"}).code, 2);
  EXPECT_EQ(run({"check", "p", "--file", fixture("stuck_set.txt")}).code, 2);
  EXPECT_EQ(run({"check", "--file", fixture("missing.txt")}).code, 2);
  EXPECT_EQ(run({"oracle", "--max-states", "9", "p"}).code, 2);
  Result parse = run({"check", "p & (q"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("p & (q\n"), std::string::npos);
  EXPECT_NE(parse.err.find("^"), std::string::npos);
}

TEST(Cli, ModelIsAPseudoModel) {
  auto path = scratch("model.txt");
  Result r = run({"model", "--out", path.string(), "~C{a,b}p & D{a}q"});
  ASSERT_EQ(r.code, 0);
  std::string text = slurp(path);
  EXPECT_EQ(text.rfind("# witness: s", 0), 0u);
  std::string witness = text.substr(11, text.find('\n') - 11);
  Result back = run({"check", "~C{a,b}p & D{a}q", "--kripke", path.string(), "--state", witness});
  EXPECT_EQ(back.code, 0) << text;
  EXPECT_EQ(back.out, "true\n");
  EXPECT_EQ(run({"model", "p & ~p"}).code, 1);
}

TEST(Cli, CheckOnModelFile) {
  Result all = run({"check", "C{a}p", "--kripke", fixture("line.model")});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "s0 true\ns1 true\ns2 false\n");
  Result one = run({"check", "C{a,b}p", "--kripke", fixture("line.model"), "--state", "s0"});
  EXPECT_EQ(one.code, 1);
  EXPECT_EQ(one.out, "false\n");
  EXPECT_EQ(run({"check", "p", "--kripke", fixture("line.model"), "--state", "s7"}).code, 2);
}

TEST(Cli, Dot) {
  Result r = run({"dot", "--phase", "pretableau", "--file", fixture("stuck_set.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  auto path = scratch("final.dot");
  Result c = run({"check", "--dot", "final", "--show-eliminated", "--out", path.string(), "--file",
                  fixture("stuck_set.txt")});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(slurp(path).find("E2"), std::string::npos);
  EXPECT_EQ(run({"check", "--dot", "final", "p"}).code, 2);
}

TEST(Cli, Oracle) {
  Result r = run({"oracle", "--max-states", "2", "p & ~D{a}p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# satisfied at"), std::string::npos);
  EXPECT_NE(r.out.find("agent a:"), std::string::npos);
  Result u = run({"oracle", "--max-states", "1", "p & ~D{a}p"});
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(u.out, "no model with at most 1 states\n");
}

TEST(Cli, BenchCorpus) {
  Result r = run({"bench", "--corpus", fixture("corpus.txt"), "--csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "formula,mode,verdict,states,eliminated_e1,eliminated_e2,ecl_size,millis");
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 8u);
}

TEST(Cli, BenchGenerated) {
  auto path = scratch("bench.csv");
  Result r = run({"bench", "--generate", "20", "--seed", "9", "--depth", "3", "--threads", "2", "--out",
                  path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("restricted"), std::string::npos);
  EXPECT_NE(r.out.find("unrestricted"), std::string::npos);
  EXPECT_EQ(slurp(path).rfind("formula,mode,", 0), 0u);
  EXPECT_EQ(run({"bench", "--generate", "5", "--modes", "restricted,upside-down"}).code, 2);
  EXPECT_EQ(run({"bench"}).code, 2);
}

TEST(Cli, BenchTimeoutFromEnvironment) {
  ::setenv("EMLTAB_TIMEOUT_MS", "oops", 1);
  EXPECT_EQ(run({"bench", "--generate", "2"}).code, 2);
  ::setenv("EMLTAB_TIMEOUT_MS", "5000", 1);
  EXPECT_EQ(run({"bench", "--generate", "2"}).code, 0);
  ::unsetenv("EMLTAB_TIMEOUT_MS");
}
