// Test helpers: a small explicit model type with its own evaluator, written
// directly from the truth clauses and independent of emltab::evaluate.
#ifndef EMLTAB_TESTS_SUPPORT_HPP
#define EMLTAB_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "emltab/formula.hpp"
#include "emltab/kripke.hpp"
#include "emltab/parser.hpp"

namespace testing_support {

using namespace emltab;

/// Agents' knowledge as class ids per state; atoms true per state.
struct TinyModel {
  int n = 0;
  std::vector<std::vector<int>> cls;       // cls[agent][state]
  std::vector<std::set<AtomId>> val;       // val[state]

  bool related(AgentId a, int s, int t) const { return a < cls.size() && cls[a][s] == cls[a][t]; }
  bool related(Coalition c, int s, int t) const {
    for (AgentId a : c.members()) {
      if (!related(a, s, t)) return false;
    }
    return true;
  }

  KripkeStructure to_kripke() const {
    KripkeStructure m(Flavor::Cmaem, static_cast<std::size_t>(n));
    for (AgentId a = 0; a < cls.size(); ++a) {
      Relation r(n);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (cls[a][s] == cls[a][t]) r.set(s, t);
        }
      }
      m.set_agent(a, r);
    }
    for (int s = 0; s < n; ++s) {
      for (AtomId p : val[s]) m.set_atom(s, p);
    }
    return m;
  }
};

inline bool naive_holds(const TinyModel& m, int s, Formula f) {
  switch (f.op()) {
    case Op::Atom:
      return m.val[s].count(f.atom()) != 0;
    case Op::Not:
      return !naive_holds(m, s, f.body());
    case Op::And:
      return naive_holds(m, s, f.lhs()) && naive_holds(m, s, f.rhs());
    case Op::Dist:
      for (int t = 0; t < m.n; ++t) {
        if (m.related(f.coalition(), s, t) && !naive_holds(m, t, f.body())) return false;
      }
      return true;
    case Op::Common: {
      // Depth-first search over single-agent steps.
      std::vector<bool> seen(m.n, false);
      std::vector<int> todo{s};
      seen[s] = true;
      while (!todo.empty()) {
        int u = todo.back();
        todo.pop_back();
        if (!naive_holds(m, u, f.body())) return false;
        for (int t = 0; t < m.n; ++t) {
          if (seen[t]) continue;
          for (AgentId a : f.coalition().members()) {
            if (m.related(a, u, t)) {
              seen[t] = true;
              todo.push_back(t);
              break;
            }
          }
        }
      }
      return true;
    }
  }
  return false;
}

inline TinyModel random_model(std::mt19937_64& rng, int max_states, std::size_t agents,
                              const std::vector<AtomId>& atoms) {
  TinyModel m;
  m.n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_states));
  m.cls.assign(agents, std::vector<int>(m.n, 0));
  for (auto& c : m.cls) {
    for (int s = 0; s < m.n; ++s) c[s] = static_cast<int>(rng() % static_cast<std::uint64_t>(m.n));
  }
  m.val.assign(m.n, {});
  for (int s = 0; s < m.n; ++s) {
    for (AtomId p : atoms) {
      if (rng() % 2) m.val[s].insert(p);
    }
  }
  return m;
}

inline Formula P(FormulaFactory& f, const std::string& text) { return parse(text, f); }

inline std::vector<std::string> printed(const std::vector<Formula>& fs, const FormulaFactory& f) {
  std::vector<std::string> out;
  for (Formula g : fs) out.push_back(print(g, f));
  return out;
}

}  // namespace testing_support

#endif  // EMLTAB_TESTS_SUPPORT_HPP
