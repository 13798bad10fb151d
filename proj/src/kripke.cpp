#include "emltab/kripke.hpp"

#include <algorithm>
#include <unordered_map>

namespace emltab {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::uint32_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto& row : r.rows_) row.set();
  return r;
}

Relation Relation::from_blocks(std::size_t n, const std::vector<std::vector<std::uint32_t>>& blocks) {
  Relation r = identity(n);
  for (const auto& b : blocks) {
    for (std::uint32_t s : b) {
      for (std::uint32_t t : b) r.set(s, t);
    }
  }
  return r;
}

Relation& Relation::operator|=(const Relation& o) {
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= o.rows_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& o) {
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] &= o.rows_[i];
  return *this;
}

bool Relation::subset_of(const Relation& o) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].is_subset_of(o.rows_[i])) return false;
  }
  return true;
}

bool Relation::reflexive() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].test(i)) return false;
  }
  return true;
}

bool Relation::symmetric() const {
  for (std::uint32_t i = 0; i < rows_.size(); ++i) {
    for (auto j = rows_[i].find_first(); j != StateSet::npos; j = rows_[i].find_next(j)) {
      if (!rows_[j].test(i)) return false;
    }
  }
  return true;
}

bool Relation::transitive() const { return transitive_closure() == *this; }

Relation Relation::transitive_closure() const {
  Relation r = *this;
  const std::size_t n = rows_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (r.rows_[i].test(k)) r.rows_[i] |= r.rows_[k];
    }
  }
  return r;
}

Relation Relation::reflexive_transitive_closure() const {
  Relation r = *this;
  r |= identity(rows_.size());
  return r.transitive_closure();
}

Relation Relation::equivalence_closure() const {
  Relation r = *this;
  for (std::uint32_t i = 0; i < rows_.size(); ++i) {
    for (auto j = rows_[i].find_first(); j != StateSet::npos; j = rows_[i].find_next(j)) {
      r.set(static_cast<std::uint32_t>(j), i);
    }
  }
  return r.reflexive_transitive_closure();
}

std::vector<std::vector<std::uint32_t>> Relation::blocks() const {
  std::vector<std::vector<std::uint32_t>> out;
  StateSet seen(rows_.size());
  for (std::uint32_t i = 0; i < rows_.size(); ++i) {
    if (seen.test(i)) continue;
    std::vector<std::uint32_t> b;
    for (auto j = rows_[i].find_first(); j != StateSet::npos; j = rows_[i].find_next(j)) {
      b.push_back(static_cast<std::uint32_t>(j));
      seen.set(j);
    }
    if (b.empty()) b.push_back(i);
    seen.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Cmaem: return "cmaem";
    case Flavor::PseudoCmaem: return "pseudo-cmaem";
    case Flavor::RawCmaes: return "raw";
  }
  return "?";
}

KripkeStructure::KripkeStructure(Flavor flavor, std::size_t states) : flavor_(flavor) {
  for (std::size_t i = 0; i < states; ++i) add_state("s" + std::to_string(i));
}

std::uint32_t KripkeStructure::add_state(std::string name) {
  if (!agents_.empty() || !coalitions_.empty()) throw ModelError("states must be added before relations");
  names_.push_back(std::move(name));
  valuation_.emplace_back();
  return static_cast<std::uint32_t>(names_.size() - 1);
}

std::optional<std::uint32_t> KripkeStructure::find_state(std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

void KripkeStructure::set_agent(AgentId a, Relation r) {
  if (r.size() != size()) throw ModelError("relation size mismatch");
  if (flavor_ != Flavor::RawCmaes && !r.equivalence()) throw ModelError("agent relation is not an equivalence");
  agents_[a] = std::move(r);
}

void KripkeStructure::set_coalition(Coalition c, Relation r) {
  if (flavor_ == Flavor::Cmaem) throw ModelError("explicit coalition relations need a pseudo or raw structure");
  if (c.empty()) throw ModelError("empty coalition");
  if (r.size() != size()) throw ModelError("relation size mismatch");
  if (flavor_ == Flavor::PseudoCmaem && !r.equivalence()) throw ModelError("coalition relation is not an equivalence");
  coalitions_[c] = std::move(r);
}

void KripkeStructure::set_atom(std::uint32_t s, AtomId p, bool value) {
  auto& v = valuation_.at(s);
  auto it = std::lower_bound(v.begin(), v.end(), p);
  bool present = it != v.end() && *it == p;
  if (value && !present) v.insert(it, p);
  if (!value && present) v.erase(it);
}

bool KripkeStructure::holds(std::uint32_t s, AtomId p) const {
  const auto& v = valuation_[s];
  return std::binary_search(v.begin(), v.end(), p);
}

std::vector<AtomId> KripkeStructure::true_atoms(std::uint32_t s) const { return valuation_[s]; }

Relation KripkeStructure::relation(Coalition a) const {
  if (auto it = coalitions_.find(a); it != coalitions_.end()) return it->second;
  if (flavor_ == Flavor::RawCmaes) {
    if (a.is_singleton()) {
      if (auto it = agents_.find(a.members().front()); it != agents_.end()) return it->second;
    }
    return Relation(size());
  }
  Relation r = Relation::full(size());
  for (AgentId x : a.members()) {
    auto single = coalitions_.find(Coalition::singleton(x));
    if (single != coalitions_.end()) {
      r &= single->second;
      continue;
    }
    auto it = agents_.find(x);
    if (it == agents_.end()) throw ModelError("no relation for agent #" + std::to_string(x));
    r &= it->second;
  }
  return r;
}

Relation KripkeStructure::common_relation(Coalition a) const {
  Relation u(size());
  for (const auto& [c, r] : coalitions_) {
    if (c.subset_of(a)) u |= r;
  }
  for (AgentId x : a.members()) {
    if (coalitions_.count(Coalition::singleton(x)) != 0) continue;
    if (agents_.count(x) != 0 || flavor_ != Flavor::RawCmaes) u |= relation(Coalition::singleton(x));
  }
  return u.reflexive_transitive_closure();
}

namespace {

StateSet boxed(const Relation& r, const StateSet& target) {
  StateSet out(r.size());
  for (std::uint32_t s = 0; s < r.size(); ++s) {
    if (r.successors(s).is_subset_of(target)) out.set(s);
  }
  return out;
}

StateSet eval(const KripkeStructure& m, Formula f, std::unordered_map<Formula, StateSet, FormulaHash>& memo,
              std::map<std::pair<bool, Coalition>, Relation>& rels) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  auto rel = [&](bool common, Coalition c) -> const Relation& {
    auto key = std::make_pair(common, c);
    auto it = rels.find(key);
    if (it == rels.end()) it = rels.emplace(key, common ? m.common_relation(c) : m.relation(c)).first;
    return it->second;
  };
  StateSet out(m.size());
  switch (f.op()) {
    case Op::Atom:
      for (std::uint32_t s = 0; s < m.size(); ++s) {
        if (m.holds(s, f.atom())) out.set(s);
      }
      break;
    case Op::Not:
      out = ~eval(m, f.body(), memo, rels);
      break;
    case Op::And:
      out = eval(m, f.lhs(), memo, rels) & eval(m, f.rhs(), memo, rels);
      break;
    case Op::Dist:
      out = boxed(rel(false, f.coalition()), eval(m, f.body(), memo, rels));
      break;
    case Op::Common:
      out = boxed(rel(true, f.coalition()), eval(m, f.body(), memo, rels));
      break;
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace

StateSet evaluate(const KripkeStructure& m, Formula f) {
  std::unordered_map<Formula, StateSet, FormulaHash> memo;
  std::map<std::pair<bool, Coalition>, Relation> rels;
  return eval(m, f, memo, rels);
}

bool check(const KripkeStructure& m, std::uint32_t s, Formula f) { return evaluate(m, f).test(s); }

StateSet a_reachable(const KripkeStructure& m, std::uint32_t s, Coalition a) {
  return m.common_relation(a).successors(s);
}

}  // namespace emltab
