#include "emltab/hintikka.hpp"

#include <set>

#include "emltab/expansion.hpp"

namespace emltab {

namespace {

std::string state_text(const HintikkaStructure& h, std::uint32_t s) {
  return h.frame.name(s) + " " + print_label(*h.closure, h.labels[s]);
}

// Coalitions whose relation a structure over this closure must provide.
std::set<Coalition> closure_coalitions(const ClosureIndex& idx) {
  std::set<Coalition> out;
  for (AgentId a : idx.agents().members()) out.insert(Coalition::singleton(a));
  for (std::uint32_t b = 0; b < idx.base_count(); ++b) {
    if (idx.base_op(b) == Op::Dist || idx.base_op(b) == Op::Common) out.insert(idx.coalition(b));
  }
  return out;
}

}  // namespace

HintikkaStructure hintikka_from_tableau(const TableauGraph& g) {
  if (!open_witness(g)) throw LogicError("tableau is closed");
  const ClosureIndex& idx = g.index();
  HintikkaStructure h;
  h.closure = g.closure;
  std::vector<std::int64_t> renumber(g.states.size(), -1);
  std::size_t n = 0;
  for (std::uint32_t s = 0; s < g.states.size(); ++s) {
    if (g.alive[s]) renumber[s] = static_cast<std::int64_t>(n++);
  }
  KripkeStructure frame(Flavor::RawCmaes);
  for (std::uint32_t s = 0; s < g.states.size(); ++s) {
    if (!g.alive[s]) continue;
    frame.add_state("s" + std::to_string(s));
    h.labels.push_back(g.states[s]);
    h.origin.push_back(s);
  }
  std::map<Coalition, Relation> rels;
  for (const SolidEdge& e : g.edges) {
    if (renumber[e.from] < 0 || renumber[e.to.index] < 0) continue;
    auto [it, fresh] = rels.try_emplace(idx.coalition(e.chi.base()), n);
    it->second.set(static_cast<std::uint32_t>(renumber[e.from]), static_cast<std::uint32_t>(renumber[e.to.index]));
  }
  for (auto& [c, r] : rels) frame.set_coalition(c, std::move(r));
  h.frame = std::move(frame);
  return h;
}

HintikkaStructure hintikka_from_model(const KripkeStructure& m, std::shared_ptr<const ClosureIndex> closure) {
  const ClosureIndex& idx = *closure;
  HintikkaStructure h;
  h.closure = closure;
  h.labels.assign(m.size(), LabelSet(idx.base_count()));
  for (std::uint32_t b = 0; b < idx.base_count(); ++b) {
    StateSet truth = evaluate(m, idx.base(b));
    for (std::uint32_t s = 0; s < m.size(); ++s) h.labels[s].insert(Literal(b, !truth.test(s)));
  }
  KripkeStructure frame(Flavor::RawCmaes);
  for (std::uint32_t s = 0; s < m.size(); ++s) frame.add_state(m.name(s));
  for (Coalition c : closure_coalitions(idx)) frame.set_coalition(c, m.relation(c));
  h.frame = std::move(frame);
  return h;
}

bool HintikkaReport::ok() const {
  for (const auto& c : conditions) {
    if (!c.passed) return false;
  }
  return true;
}

std::string HintikkaReport::summary() const {
  std::string out;
  for (const auto& c : conditions) {
    out += c.name;
    out += c.passed ? " ok" : " FAILED: " + c.witness;
    out += '\n';
  }
  return out;
}

HintikkaReport verify_hintikka(const HintikkaStructure& h) {
  HintikkaReport rep;
  const ClosureIndex& idx = *h.closure;
  const std::size_t n = h.labels.size();
  auto fail = [&](int which, std::string msg) {
    auto& c = rep.conditions[which];
    if (c.passed) {
      c.passed = false;
      c.witness = std::move(msg);
    }
  };

  std::map<Coalition, Relation> rel_cache;
  auto rel = [&](Coalition c) -> const Relation& {
    auto it = rel_cache.find(c);
    if (it == rel_cache.end()) it = rel_cache.emplace(c, h.frame.relation(c)).first;
    return it->second;
  };

  for (std::uint32_t s = 0; s < n; ++s) {
    const LabelSet& l = h.labels[s];
    if (!fully_expanded(idx, l)) fail(0, state_text(h, s));

    for_each_bit(l.negative(), [&](std::uint32_t b) {
      Op op = idx.base_op(b);
      if (op != Op::Dist && op != Op::Common) return;
      const Literal goal = ~idx.body(b);
      const Coalition a = idx.coalition(b);
      const StateSet& succ = op == Op::Dist ? rel(a).successors(s) : a_reachable(h.frame, s, a);
      bool found = false;
      for (auto t = succ.find_first(); t != StateSet::npos && !found; t = succ.find_next(t)) {
        found = h.labels[t].contains(goal);
      }
      if (!found) {
        fail(op == Op::Dist ? 1 : 3, state_text(h, s) + " lacks a witness for " + idx.print(Literal(b, true)));
      }
    });
  }

  // CH3 over every edge of every explicit relation.
  for (const auto& [a, r] : h.frame.coalition_relations()) {
    for (std::uint32_t s = 0; s < n; ++s) {
      const StateSet& succ = r.successors(s);
      for (auto t = succ.find_first(); t != StateSet::npos; t = succ.find_next(t)) {
        for (std::uint32_t b = 0; b < idx.base_count(); ++b) {
          if (idx.base_op(b) != Op::Dist || !idx.coalition(b).subset_of(a)) continue;
          const Literal d(b, false);
          if (h.labels[s].contains(d) != h.labels[t].contains(d)) {
            fail(2, idx.print(d) + " differs along " + h.frame.name(s) + " -> " + h.frame.name(t) + " ({" +
                        idx.factory().coalition_text(a) + "})");
          }
        }
      }
    }
  }
  return rep;
}

KripkeStructure pseudo_model_from_hintikka(const HintikkaStructure& h) {
  const ClosureIndex& idx = *h.closure;
  const std::size_t n = h.labels.size();
  KripkeStructure m(Flavor::PseudoCmaem);
  for (std::uint32_t s = 0; s < n; ++s) m.add_state(h.frame.name(s));

  std::set<Coalition> wanted = closure_coalitions(idx);
  for (const auto& [c, r] : h.frame.coalition_relations()) wanted.insert(c);
  for (Coalition a : wanted) {
    Relation u(n);
    for (const auto& [b, r] : h.frame.coalition_relations()) {
      if (a.subset_of(b)) u |= r;
    }
    m.set_coalition(a, u.equivalence_closure());
  }
  for (std::uint32_t s = 0; s < n; ++s) {
    for_each_bit(h.labels[s].positive(), [&](std::uint32_t b) {
      if (idx.base_op(b) == Op::Atom) m.set_atom(s, idx.base(b).atom());
    });
  }
  return m;
}

}  // namespace emltab
