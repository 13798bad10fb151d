#include "emltab/tableau.hpp"

#include <algorithm>
#include <deque>

namespace emltab {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Pretableau: return "pretableau";
    case Phase::Initial: return "initial";
    case Phase::Final: return "final";
  }
  return "?";
}

const char* to_string(ElimRule r) { return r == ElimRule::E1 ? "E1" : "E2"; }

TableauGraph::TableauGraph(std::shared_ptr<const ClosureIndex> idx, CutMode m)
    : closure(std::move(idx)), mode(m), input(closure->base_count()) {
  for (Formula f : closure->inputs()) input.insert(closure->literal(f));
}

std::pair<std::uint32_t, bool> TableauGraph::intern_state(const LabelSet& s) {
  auto [it, fresh] = state_ids.emplace(s, static_cast<std::uint32_t>(states.size()));
  if (fresh) {
    states.push_back(s);
    alive.push_back(true);
  }
  return {it->second, fresh};
}

std::pair<std::uint32_t, bool> TableauGraph::intern_prestate(const LabelSet& s) {
  auto [it, fresh] = prestate_ids.emplace(s, static_cast<std::uint32_t>(prestates.size()));
  if (fresh) {
    prestates.push_back(s);
    dashed.emplace_back();
    expanded.push_back(false);
  }
  return {it->second, fresh};
}

std::size_t TableauGraph::alive_count() const { return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true)); }

std::vector<std::vector<SolidEdge>> TableauGraph::out_edges() const {
  std::vector<std::vector<SolidEdge>> out(states.size());
  for (const SolidEdge& e : edges) out[e.from].push_back(e);
  return out;
}

std::vector<std::uint32_t> apply_sr(TableauGraph& t, std::uint32_t p, const Deadline& deadline) {
  std::vector<std::uint32_t> created;
  if (t.expanded[p]) return created;
  t.expanded[p] = true;
  Family fam = cs_expansions(t.index(), t.prestates[p], t.mode, deadline);
  for (const LabelSet& s : fam) {
    auto [id, fresh] = t.intern_state(s);
    t.dashed[p].push_back(id);
    if (fresh) created.push_back(id);
  }
  return created;
}

LabelSet dr_label(const ClosureIndex& index, const LabelSet& delta, Literal chi) {
  const std::uint32_t cb = chi.base();
  const Coalition a = index.coalition(cb);
  LabelSet g(index.base_count());
  g.insert(~index.body(cb));
  for_each_bit(delta.positive(), [&](std::uint32_t b) {
    if (index.base_op(b) == Op::Dist && index.coalition(b).subset_of(a)) g.insert(Literal(b, false));
  });
  for_each_bit(delta.negative(), [&](std::uint32_t b) {
    Op op = index.base_op(b);
    if (op == Op::Dist && b != cb && index.coalition(b).subset_of(a)) g.insert(Literal(b, true));
    if (op == Op::Common && index.coalition(b).intersects(a)) g.insert(Literal(b, true));
  });
  return g;
}

std::pair<std::uint32_t, bool> apply_dr(TableauGraph& t, std::uint32_t state, Literal chi) {
  auto res = t.intern_prestate(dr_label(t.index(), t.states[state], chi));
  t.edges.push_back(SolidEdge{state, chi, NodeId{NodeKind::Prestate, res.first}});
  return res;
}

TableauGraph build_pretableau(std::shared_ptr<const ClosureIndex> index, CutMode mode, const Deadline& deadline) {
  TableauGraph t(std::move(index), mode);
  t.intern_prestate(t.input);

  std::vector<std::uint32_t> pending_prestates{0};
  while (!pending_prestates.empty()) {
    std::vector<std::uint32_t> new_states;
    for (std::uint32_t p : pending_prestates) {
      auto created = apply_sr(t, p, deadline);
      new_states.insert(new_states.end(), created.begin(), created.end());
    }
    pending_prestates.clear();
    for (std::uint32_t s : new_states) {
      deadline.check();
      for_each_bit(t.states[s].negative(), [&](std::uint32_t b) {
        if (t.index().base_op(b) != Op::Dist) return;
        auto [p, fresh] = apply_dr(t, s, Literal(b, true));
        if (fresh) pending_prestates.push_back(p);
      });
    }
  }
  return t;
}

TableauGraph eliminate_prestates(const TableauGraph& pre) {
  TableauGraph t = pre;
  t.phase = Phase::Initial;
  std::vector<SolidEdge> edges;
  for (const SolidEdge& e : pre.edges) {
    if (e.to.kind == NodeKind::State) {
      edges.push_back(e);
      continue;
    }
    for (std::uint32_t s : pre.dashed[e.to.index]) {
      edges.push_back(SolidEdge{e.from, e.chi, NodeId{NodeKind::State, s}});
    }
  }
  t.edges = std::move(edges);
  t.prestates.clear();
  t.dashed.clear();
  t.expanded.clear();
  t.prestate_ids.clear();
  return t;
}

std::vector<Literal> eventualities(const TableauGraph& t) {
  const ClosureIndex& idx = t.index();
  std::vector<bool> seen(idx.base_count(), false);
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    if (!t.alive[s]) continue;
    for_each_bit(t.states[s].negative(), [&](std::uint32_t b) {
      if (idx.base_op(b) == Op::Common) seen[b] = true;
    });
  }
  std::vector<Literal> out;
  for (std::uint32_t b = 0; b < seen.size(); ++b) {
    if (seen[b]) out.emplace_back(b, true);
  }
  std::sort(out.begin(), out.end(), [&](Literal x, Literal y) { return idx.rank(x) < idx.rank(y); });
  return out;
}

namespace {

std::vector<bool> marking(const TableauGraph& t, const std::vector<std::vector<SolidEdge>>& out, Literal xi) {
  const ClosureIndex& idx = t.index();
  const Literal goal = ~idx.body(xi.base());
  const Coalition a = idx.coalition(xi.base());
  std::vector<bool> marked(t.states.size(), false);
  for (std::size_t s = 0; s < t.states.size(); ++s) marked[s] = t.alive[s] && t.states[s].contains(goal);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < t.states.size(); ++s) {
      if (marked[s] || !t.alive[s] || !t.states[s].contains(xi)) continue;
      for (const SolidEdge& e : out[s]) {
        const Coalition c = idx.coalition(e.chi.base());
        if (c.is_singleton() && c.subset_of(a) && marked[e.to.index]) {
          marked[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return marked;
}

// Removes states with a diamond lacking a live successor until none is left.
std::size_t run_e1(TableauGraph& t, const std::vector<std::vector<SolidEdge>>& out, std::uint32_t cycle) {
  const ClosureIndex& idx = t.index();
  std::size_t removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t s = 0; s < t.states.size(); ++s) {
      if (!t.alive[s]) continue;
      bool ok = true;
      for_each_bit(t.states[s].negative(), [&](std::uint32_t b) {
        if (!ok || idx.base_op(b) != Op::Dist) return;
        const Literal chi(b, true);
        ok = std::any_of(out[s].begin(), out[s].end(),
                         [&](const SolidEdge& e) { return e.chi == chi && t.alive[e.to.index]; });
      });
      if (ok) continue;
      t.alive[s] = false;
      t.log.push_back(Elimination{s, ElimRule::E1, std::nullopt, cycle});
      ++removed;
      changed = true;
    }
  }
  return removed;
}

}  // namespace

std::vector<bool> realization_marking(const TableauGraph& t, Literal xi) { return marking(t, t.out_edges(), xi); }

TableauGraph eliminate_states(TableauGraph t, const Deadline& deadline) {
  t.phase = Phase::Final;
  const auto out = t.out_edges();
  const std::vector<Literal> evs = eventualities(t);
  std::uint32_t cycle = 0;
  bool removed_any = true;
  while (removed_any) {
    deadline.check();
    ++cycle;
    t.cycles = cycle;
    removed_any = false;
    if (evs.empty()) {
      run_e1(t, out, cycle);
      break;
    }
    for (Literal xi : evs) {
      std::vector<bool> marked = marking(t, out, xi);
      for (std::uint32_t s = 0; s < t.states.size(); ++s) {
        if (t.alive[s] && t.states[s].contains(xi) && !marked[s]) {
          t.alive[s] = false;
          t.log.push_back(Elimination{s, ElimRule::E2, xi, cycle});
          removed_any = true;
        }
      }
      if (run_e1(t, out, cycle) > 0) removed_any = true;
    }
  }
  return t;
}

std::optional<std::uint32_t> open_witness(const TableauGraph& g) {
  for (std::uint32_t s = 0; s < g.states.size(); ++s) {
    if (g.alive[s] && g.input.subset_of(g.states[s])) return s;
  }
  return std::nullopt;
}

TableauRun run_tableau(FormulaFactory& factory, const std::vector<Formula>& theta, CutMode mode,
                       const Deadline& deadline) {
  auto index = std::make_shared<const ClosureIndex>(theta, factory);
  TableauGraph pre = build_pretableau(index, mode, deadline);
  TableauGraph initial = eliminate_prestates(pre);
  TableauGraph fin = eliminate_states(initial, deadline);

  Verdict v;
  v.witness = open_witness(fin);
  v.sat = v.witness.has_value();
  v.diagnostic = mode == CutMode::NoCut;
  Stats& st = v.stats;
  st.ecl_size = index->size();
  st.prestates = pre.prestates.size();
  st.states = pre.states.size();
  st.root_states = pre.dashed.empty() ? 0 : pre.dashed[0].size();
  st.solid_edges = initial.edges.size();
  for (const Elimination& e : fin.log) {
    (e.rule == ElimRule::E1 ? st.eliminated_e1 : st.eliminated_e2) += 1;
  }
  st.cycles = fin.cycles;
  return TableauRun{std::move(pre), std::move(initial), std::move(fin), v};
}

Verdict decide(FormulaFactory& factory, const std::vector<Formula>& theta, CutMode mode, const Deadline& deadline) {
  return run_tableau(factory, theta, mode, deadline).verdict;
}

}  // namespace emltab
