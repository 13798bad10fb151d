#include "emltab/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace emltab {

std::vector<AgentId> Coalition::members() const {
  std::vector<AgentId> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<AgentId>(std::countr_zero(b)));
  }
  return out;
}

std::strong_ordering canonical_compare(Formula a, Formula b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  switch (a.op()) {
    case Op::Atom:
      return a.atom_name().compare(b.atom_name()) <=> 0;
    case Op::Not:
      return canonical_compare(a.body(), b.body());
    case Op::And:
      if (auto c = canonical_compare(a.lhs(), b.lhs()); c != 0) return c;
      return canonical_compare(a.rhs(), b.rhs());
    case Op::Dist:
    case Op::Common:
      if (auto c = a.coalition() <=> b.coalition(); c != 0) return c;
      return canonical_compare(a.body(), b.body());
  }
  return std::strong_ordering::equal;
}

std::size_t FormulaFactory::KeyHash::operator()(const Key& k) const {
  std::size_t h = static_cast<std::size_t>(k.op);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(k.coalition);
  mix(k.atom);
  mix(std::hash<const void*>{}(k.lhs));
  mix(std::hash<const void*>{}(k.rhs));
  return h;
}

AgentId FormulaFactory::agent(std::string_view name) {
  std::string key(name);
  if (auto it = agent_index_.find(key); it != agent_index_.end()) return it->second;
  if (agents_.size() >= kMaxAgents) {
    throw LogicError("too many agents (limit " + std::to_string(kMaxAgents) + ")");
  }
  auto id = static_cast<AgentId>(agents_.size());
  agents_.push_back(key);
  agent_index_.emplace(std::move(key), id);
  return id;
}

std::optional<AgentId> FormulaFactory::find_agent(std::string_view name) const {
  if (auto it = agent_index_.find(std::string(name)); it != agent_index_.end()) return it->second;
  return std::nullopt;
}

AtomId FormulaFactory::atom_id(std::string_view name) {
  std::string key(name);
  if (auto it = atom_index_.find(key); it != atom_index_.end()) return it->second;
  auto id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(key);
  atom_index_.emplace(std::move(key), id);
  return id;
}

std::optional<AtomId> FormulaFactory::find_atom(std::string_view name) const {
  if (auto it = atom_index_.find(std::string(name)); it != atom_index_.end()) return it->second;
  return std::nullopt;
}

Coalition FormulaFactory::coalition(std::initializer_list<std::string_view> names) {
  Coalition c;
  for (auto n : names) c = c | Coalition::singleton(agent(n));
  return c;
}

Coalition FormulaFactory::coalition(const std::vector<std::string>& names) {
  Coalition c;
  for (const auto& n : names) c = c | Coalition::singleton(agent(n));
  return c;
}

std::string FormulaFactory::coalition_text(Coalition c) const {
  std::string out;
  for (AgentId a : c.members()) {
    if (!out.empty()) out += ',';
    out += agent_name(a);
  }
  return out;
}

Formula FormulaFactory::intern(Op op, Coalition c, AtomId atom, Formula lhs, Formula rhs) {
  Key key{op, c.bits(), atom, lhs.node_, rhs.node_};
  if (auto it = table_.find(key); it != table_.end()) return Formula(it->second);
  std::uint32_t size = 1;
  if (lhs.valid()) size += lhs.size();
  if (rhs.valid()) size += rhs.size();
  const std::string* name = op == Op::Atom ? &atoms_[atom] : nullptr;
  nodes_.push_back(detail::Node{op, c, atom, lhs.node_, rhs.node_, size,
                                static_cast<std::uint32_t>(nodes_.size()), name});
  const detail::Node* n = &nodes_.back();
  table_.emplace(key, n);
  return Formula(n);
}

Formula FormulaFactory::atom(std::string_view name) {
  return intern(Op::Atom, Coalition{}, atom_id(name), Formula{}, Formula{});
}

Formula FormulaFactory::neg(Formula f) { return intern(Op::Not, Coalition{}, 0, f, Formula{}); }

Formula FormulaFactory::conj(Formula a, Formula b) { return intern(Op::And, Coalition{}, 0, a, b); }

Formula FormulaFactory::dist(Coalition c, Formula f) {
  if (c.empty()) throw LogicError("empty coalition");
  return intern(Op::Dist, c, 0, f, Formula{});
}

Formula FormulaFactory::common(Coalition c, Formula f) {
  if (c.empty()) throw LogicError("empty coalition");
  return intern(Op::Common, c, 0, f, Formula{});
}

Formula FormulaFactory::disj(Formula a, Formula b) { return neg(conj(neg(a), neg(b))); }

Formula FormulaFactory::implies(Formula a, Formula b) { return neg(conj(a, neg(b))); }

Formula FormulaFactory::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula FormulaFactory::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw LogicError("empty conjunction");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

namespace {
void collect(Formula f, std::unordered_set<Formula, FormulaHash>& seen, std::vector<Formula>& out) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  switch (f.op()) {
    case Op::Atom:
      break;
    case Op::And:
      collect(f.lhs(), seen, out);
      collect(f.rhs(), seen, out);
      break;
    default:
      collect(f.body(), seen, out);
  }
}
}  // namespace

std::vector<Formula> subformulas(Formula f) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> out;
  collect(f, seen, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

Coalition agents_of(Formula f) {
  Coalition c;
  for (Formula g : subformulas(f)) {
    if (g.is(Op::Dist) || g.is(Op::Common)) c = c | g.coalition();
  }
  return c;
}

std::vector<AtomId> atoms_of(Formula f) {
  std::set<AtomId> ids;
  for (Formula g : subformulas(f)) {
    if (g.is(Op::Atom)) ids.insert(g.atom());
  }
  return {ids.begin(), ids.end()};
}

}  // namespace emltab
