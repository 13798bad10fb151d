#include <gtest/gtest.h>

#include <algorithm>

#include "emltab/dot.hpp"
#include "emltab/tableau.hpp"
#include "support.hpp"

using namespace emltab;
using testing_support::P;

namespace {

struct Solved {
  FormulaFactory f;
  std::vector<Formula> theta;
  TableauRun run;

  Solved(std::vector<const char*> texts, CutMode mode) : run(make(texts, mode)) {}

  TableauRun make(const std::vector<const char*>& texts, CutMode mode) {
    for (auto t : texts) theta.push_back(P(f, t));
    return run_tableau(f, theta, mode);
  }

  const ClosureIndex& idx() const { return run.pretableau.index(); }
  LabelSet label(std::vector<const char*> texts) {
    std::vector<Formula> fs;
    for (auto t : texts) fs.push_back(P(f, t));
    return make_label(idx(), fs);
  }
  std::vector<std::string> alive_labels() const {
    std::vector<std::string> out;
    const auto& g = run.final_graph;
    for (std::uint32_t s = 0; s < g.states.size(); ++s) {
      if (g.alive[s]) out.push_back(print_label(idx(), g.states[s]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::optional<std::uint32_t> prestate_of(const TableauGraph& g, const LabelSet& l) {
  auto it = g.prestate_ids.find(l);
  if (it == g.prestate_ids.end()) return std::nullopt;
  return it->second;
}

}  // namespace

TEST(Pretableau, StuckEventuality) {
  Solved r({"~D{a,c}C{a,b}p", "C{a,b}(p & q)"}, CutMode::Restricted);
  const TableauGraph& pre = r.run.pretableau;
  EXPECT_EQ(pre.phase, Phase::Pretableau);
  EXPECT_EQ(pre.prestates.size(), 5u);
  EXPECT_EQ(pre.states.size(), 5u);
  EXPECT_EQ(pre.dashed[0].size(), 3u);

  auto g2 = prestate_of(pre, r.label({"~C{a,b}p", "D{a}C{a,b}(p & q)", "D{a}C{a,b}p"}));
  auto g3 = prestate_of(pre, r.label({"~C{a,b}p", "D{a}C{a,b}(p & q)", "~D{a}C{a,b}p"}));
  ASSERT_TRUE(g2 && g3);
  EXPECT_TRUE(pre.dashed[*g2].empty());
  EXPECT_EQ(pre.dashed[*g3].size(), 1u);

  for (const SolidEdge& e : pre.edges) {
    EXPECT_EQ(e.to.kind, NodeKind::Prestate);
    EXPECT_TRUE(pre.states[e.from].contains(e.chi));
  }
}

TEST(Pretableau, DrLabels) {
  Solved r({"~D{a,c}C{a,b}p", "C{a,b}(p & q)"}, CutMode::Restricted);
  const ClosureIndex& idx = r.idx();
  Literal chi = idx.literal(P(r.f, "~D{a,c}C{a,b}p"));
  // The root state with C{a,b}p and the one with ~D{a}C{a,b}p.
  LabelSet d1 = r.label({"~D{a,c}C{a,b}p", "C{a,b}(p & q)", "C{a,b}p", "D{a}C{a,b}p", "D{b}C{a,b}p", "p", "q",
                         "p & q", "D{a}C{a,b}(p & q)", "D{b}C{a,b}(p & q)"});
  EXPECT_EQ(print_label(idx, dr_label(idx, d1, chi)), "{~C{a,b}p, D{a}C{a,b}p, D{a}C{a,b}(p & q)}");
  LabelSet d2 = r.label({"~D{a,c}C{a,b}p", "C{a,b}(p & q)", "~C{a,b}p", "~D{a}C{a,b}p", "p", "q", "p & q",
                         "D{a}C{a,b}(p & q)", "D{b}C{a,b}(p & q)"});
  EXPECT_EQ(print_label(idx, dr_label(idx, d2, chi)), "{~C{a,b}p, ~D{a}C{a,b}p, D{a}C{a,b}(p & q)}");

  FormulaFactory f;
  ClosureIndex small({P(f, "~D{a}p")}, f);
  LabelSet d = make_label(small, {P(f, "~D{a}p")});
  EXPECT_EQ(print_label(small, dr_label(small, d, small.literal(P(f, "~D{a}p")))), "{~p}");
}

TEST(Pretableau, RootStatesOfEventuality) {
  Solved r({"~C{a,b}D{a}p"}, CutMode::Restricted);
  EXPECT_EQ(r.run.pretableau.dashed[0].size(), 4u);
  EXPECT_EQ(r.run.verdict.stats.root_states, 4u);
}

TEST(Pretableau, ApplyRulesDirectly) {
  FormulaFactory f;
  auto idx = std::make_shared<const ClosureIndex>(std::vector<Formula>{P(f, "~D{a}p & q")}, f);
  TableauGraph g(idx, CutMode::Restricted);
  auto [p0, fresh] = g.intern_prestate(g.input);
  EXPECT_TRUE(fresh);
  auto created = apply_sr(g, p0);
  ASSERT_EQ(created.size(), 1u);
  EXPECT_TRUE(apply_sr(g, p0).empty());
  auto [p1, made] = apply_dr(g, created[0], idx->literal(P(f, "~D{a}p")));
  EXPECT_TRUE(made);
  EXPECT_EQ(print_label(*idx, g.prestates[p1]), "{~p}");
  auto again = apply_dr(g, created[0], idx->literal(P(f, "~D{a}p")));
  EXPECT_EQ(again.first, p1);
  EXPECT_FALSE(again.second);
}

TEST(Tableau, SingleAtom) {
  Solved r({"p"}, CutMode::Restricted);
  EXPECT_TRUE(r.run.verdict.sat);
  EXPECT_EQ(r.run.pretableau.prestates.size(), 1u);
  EXPECT_EQ(r.run.pretableau.states.size(), 1u);
  EXPECT_TRUE(r.run.pretableau.edges.empty());
  EXPECT_TRUE(r.run.final_graph.log.empty());
  EXPECT_EQ(r.alive_labels(), (std::vector<std::string>{"{p}"}));
}

TEST(Tableau, StuckEventualityElimination) {
  Solved r({"~D{a,c}C{a,b}p", "C{a,b}(p & q)"}, CutMode::Restricted);
  EXPECT_FALSE(r.run.verdict.sat);
  EXPECT_EQ(r.run.initial.phase, Phase::Initial);
  EXPECT_EQ(r.run.initial.states.size(), 5u);
  EXPECT_TRUE(r.run.initial.prestates.empty());
  const auto& log = r.run.final_graph.log;
  ASSERT_EQ(log.size(), 5u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(log[i].rule, ElimRule::E2);
    EXPECT_EQ(r.idx().print(*log[i].eventuality), "~C{a,b}p");
  }
  EXPECT_EQ(log[4].rule, ElimRule::E1);
  EXPECT_TRUE(r.run.final_graph.states[log[4].state].contains(r.idx().literal(P(r.f, "C{a,b}p"))));
  EXPECT_EQ(r.run.final_graph.alive_count(), 0u);
  EXPECT_EQ(r.run.verdict.stats.eliminated_e1, 1u);
  EXPECT_EQ(r.run.verdict.stats.eliminated_e2, 4u);
}

TEST(Tableau, StuckEventualityInitialEdges) {
  Solved r({"~D{a,c}C{a,b}p", "C{a,b}(p & q)"}, CutMode::Restricted);
  const TableauGraph& g = r.run.initial;
  // The non-root state refuting D{a}C{a,b}p loops on its own diamond and
  // also reaches the state refuting D{b}C{a,b}p.
  const LabelSet d4 = r.label({"~C{a,b}p", "~D{a}C{a,b}p", "C{a,b}(p & q)", "p", "q", "p & q",
                               "D{a}C{a,b}(p & q)", "D{b}C{a,b}(p & q)"});
  const LabelSet d5 = r.label({"~C{a,b}p", "~D{b}C{a,b}p", "C{a,b}(p & q)", "p", "q", "p & q",
                               "D{a}C{a,b}(p & q)", "D{b}C{a,b}(p & q)"});
  ASSERT_TRUE(g.state_ids.count(d4) && g.state_ids.count(d5));
  std::uint32_t i4 = g.state_ids.at(d4), i5 = g.state_ids.at(d5);
  Literal chi_a = r.idx().literal(P(r.f, "~D{a}C{a,b}p"));
  std::vector<std::uint32_t> targets;
  for (const SolidEdge& e : g.edges) {
    EXPECT_EQ(e.to.kind, NodeKind::State);
    if (e.from == i4) {
      EXPECT_EQ(e.chi, chi_a);
      targets.push_back(e.to.index);
    }
  }
  std::sort(targets.begin(), targets.end());
  std::vector<std::uint32_t> expect{i4, i5};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(targets, expect);
}

TEST(Tableau, HiddenConflictCloses) {
  for (CutMode m : {CutMode::Restricted, CutMode::Unrestricted}) {
    Solved r({"~D{a,b}p & ~D{a,c}~D{a}p"}, m);
    EXPECT_FALSE(r.run.verdict.sat) << to_string(m);
    EXPECT_EQ(r.alive_labels(), (std::vector<std::string>{"{p, D{a}p}", "{~p, ~D{a}p}", "{~p}"}));
    const TableauGraph& pre = r.run.pretableau;
    for (auto lits : {std::vector<const char*>{"~p", "D{a}p"}, std::vector<const char*>{"~~D{a}p", "~D{a}p"}}) {
      auto p = prestate_of(pre, r.label(lits));
      ASSERT_TRUE(p.has_value());
      EXPECT_TRUE(pre.dashed[*p].empty());
    }
    for (const Elimination& e : r.run.final_graph.log) EXPECT_EQ(e.rule, ElimRule::E1);
  }
}

TEST(Tableau, HiddenConflictWithoutCutsIsOpen) {
  Solved r({"~D{a,b}p & ~D{a,c}~D{a}p"}, CutMode::NoCut);
  EXPECT_TRUE(r.run.verdict.sat);
  EXPECT_TRUE(r.run.verdict.diagnostic);
}

TEST(Realization, Chain) {
  FormulaFactory f;
  auto idx = std::make_shared<const ClosureIndex>(std::vector<Formula>{P(f, "~C{a,b}p")}, f);
  TableauGraph g(idx, CutMode::Restricted);
  g.phase = Phase::Initial;
  auto d0 = g.intern_state(make_label(*idx, {P(f, "~C{a,b}p"), P(f, "~D{a}C{a,b}p")})).first;
  auto d1 = g.intern_state(make_label(*idx, {P(f, "~p")})).first;
  auto d2 = g.intern_state(make_label(*idx, {P(f, "~C{a,b}p"), P(f, "~D{b}C{a,b}p")})).first;
  g.edges.push_back(SolidEdge{d0, idx->literal(P(f, "~D{a}C{a,b}p")), NodeId{NodeKind::State, d1}});
  g.edges.push_back(SolidEdge{d2, idx->literal(P(f, "~D{b}C{a,b}p")), NodeId{NodeKind::State, d2}});
  auto marks = realization_marking(g, idx->literal(P(f, "~C{a,b}p")));
  EXPECT_TRUE(marks[d0]);
  EXPECT_TRUE(marks[d1]);
  EXPECT_FALSE(marks[d2]);

  TableauGraph fin = eliminate_states(g);
  EXPECT_FALSE(fin.alive[d2]);
  EXPECT_TRUE(fin.alive[d0]);
  ASSERT_EQ(fin.log.size(), 1u);
  EXPECT_EQ(fin.log[0].rule, ElimRule::E2);
}

TEST(Realization, StuckEventualityHasNoMarks) {
  Solved r({"~D{a,c}C{a,b}p", "C{a,b}(p & q)"}, CutMode::Restricted);
  auto marks = realization_marking(r.run.initial, r.idx().literal(P(r.f, "~C{a,b}p")));
  EXPECT_EQ(std::count(marks.begin(), marks.end(), true), 0);
}

TEST(Elimination, Idempotent) {
  Solved r({"~C{a,b}D{a}p & D{b}q"}, CutMode::Restricted);
  TableauGraph again = eliminate_states(r.run.final_graph);
  EXPECT_EQ(again.alive, r.run.final_graph.alive);
  EXPECT_EQ(again.log.size(), r.run.final_graph.log.size());
}

TEST(Decide, KnownVerdicts) {
  FormulaFactory f;
  EXPECT_FALSE(decide(f, {P(f, "~D{a,c}C{a,b}p & C{a,b}(p & q)")}, CutMode::Restricted).sat);
  EXPECT_FALSE(decide(f, {P(f, "~D{a,b}p & ~D{a,c}~D{a}p")}, CutMode::Restricted).sat);
  EXPECT_TRUE(decide(f, {P(f, "~D{a,b}p & ~D{a,c}~D{a}p")}, CutMode::NoCut).sat);
  for (CutMode m : {CutMode::Restricted, CutMode::Unrestricted, CutMode::NoCut}) EXPECT_TRUE(decide(f, {P(f, "p")}, m).sat);
  EXPECT_TRUE(decide(f, {P(f, "C{a,b}D{a}p -> ~C{b,c}D{b}p")}, CutMode::Restricted).sat);
}

TEST(Decide, Deterministic) {
  FormulaFactory f;
  Formula t = P(f, "~C{a,b}(D{a}p & ~D{b}q) & C{b}~~p");
  Verdict v1 = decide(f, {t}, CutMode::Restricted);
  Verdict v2 = decide(f, {t}, CutMode::Restricted);
  EXPECT_EQ(v1.sat, v2.sat);
  EXPECT_EQ(v1.witness, v2.witness);
  EXPECT_EQ(v1.stats.states, v2.stats.states);
  EXPECT_EQ(v1.stats.eliminated_e2, v2.stats.eliminated_e2);
}

TEST(Dot, PhasesRender) {
  Solved r({"~D{a,b}p & ~D{a,c}~D{a}p"}, CutMode::Restricted);
  std::string pre = to_dot(r.run.pretableau);
  EXPECT_NE(pre.find("digraph pretableau"), std::string::npos);
  EXPECT_NE(pre.find("style=dashed"), std::string::npos);
  EXPECT_NE(pre.find("label=\"~D{a,b}p\""), std::string::npos);
  std::string fin = to_dot(r.run.final_graph);
  EXPECT_EQ(fin.find("S0 ["), std::string::npos);
  std::string grey = to_dot(r.run.final_graph, true);
  EXPECT_NE(grey.find("color=grey"), std::string::npos);
  EXPECT_NE(grey.find("E1"), std::string::npos);
}

TEST(Tableau, RestrictedCutsCanKeepAnExtraState) {
  // Without a diamond in the set there is no restricted cut on C{a,b,c}q, so
  // {~q, ~(q & C{a,b,c}q)} survives as a state of its own.  The unrestricted
  // cut closes the C{a,b,c}q branch and the other branch merges with an
  // existing state.
  Solved r({"~(q & C{a,b,c}q)"}, CutMode::Restricted);
  Solved u({"~(q & C{a,b,c}q)"}, CutMode::Unrestricted);
  EXPECT_EQ(r.run.verdict.stats.states, 9u);
  EXPECT_EQ(u.run.verdict.stats.states, 8u);
  EXPECT_EQ(r.run.verdict.sat, u.run.verdict.sat);
  EXPECT_TRUE(r.run.pretableau.state_ids.count(r.label({"~q", "~(q & C{a,b,c}q)"})));
}
