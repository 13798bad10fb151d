#include "emltab/closure.hpp"

#include <algorithm>
#include <set>

#include "emltab/parser.hpp"

namespace emltab {

const char* to_string(FormulaKind k) {
  switch (k) {
    case FormulaKind::Literal: return "literal";
    case FormulaKind::NegLiteral: return "neg-literal";
    case FormulaKind::Alpha: return "alpha";
    case FormulaKind::Beta: return "beta";
    case FormulaKind::DiamondD: return "diamond";
  }
  return "?";
}

namespace {

void sort_canonical(std::vector<Formula>& fs) {
  std::sort(fs.begin(), fs.end(), CanonicalLess{});
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

std::vector<Formula> common_unfold(Formula c, FormulaFactory& factory, bool negate) {
  std::vector<Formula> out;
  out.push_back(negate ? factory.neg(c.body()) : c.body());
  for (AgentId a : c.coalition().members()) {
    Formula d = factory.dist(Coalition::singleton(a), c);
    out.push_back(negate ? factory.neg(d) : d);
  }
  return out;
}

}  // namespace

FormulaClass classify(Formula f, FormulaFactory& factory) {
  FormulaClass out{FormulaKind::Literal, {}, Coalition{}, Formula{}};
  switch (f.op()) {
    case Op::Atom:
      return out;
    case Op::And:
      out.kind = FormulaKind::Alpha;
      out.components = {f.lhs(), f.rhs()};
      break;
    case Op::Dist:
      out.kind = FormulaKind::Alpha;
      out.components = {f, f.body()};
      break;
    case Op::Common:
      out.kind = FormulaKind::Alpha;
      out.components = common_unfold(f, factory, false);
      break;
    case Op::Not: {
      Formula g = f.body();
      switch (g.op()) {
        case Op::Atom:
          out.kind = FormulaKind::NegLiteral;
          return out;
        case Op::Not:
          out.kind = FormulaKind::Alpha;
          out.components = {g.body()};
          break;
        case Op::And:
          out.kind = FormulaKind::Beta;
          out.components = {factory.neg(g.lhs()), factory.neg(g.rhs())};
          break;
        case Op::Dist:
          out.kind = FormulaKind::DiamondD;
          out.coalition = g.coalition();
          out.body = g.body();
          return out;
        case Op::Common:
          out.kind = FormulaKind::Beta;
          out.components = common_unfold(g, factory, true);
          break;
      }
      break;
    }
  }
  sort_canonical(out.components);
  return out;
}

std::vector<Formula> closure(const std::vector<Formula>& fs, FormulaFactory& factory) {
  std::unordered_map<Formula, bool, FormulaHash> seen;
  std::vector<Formula> todo;
  std::vector<Formula> out;
  auto add = [&](Formula g) {
    if (seen.emplace(g, true).second) {
      todo.push_back(g);
      out.push_back(g);
    }
  };
  for (Formula f : fs) add(f);
  while (!todo.empty()) {
    Formula g = todo.back();
    todo.pop_back();
    FormulaClass c = classify(g, factory);
    for (Formula h : c.components) add(h);
    if (c.kind == FormulaKind::DiamondD) add(factory.neg(c.body));
  }
  sort_canonical(out);
  return out;
}

std::vector<Formula> closure(Formula f, FormulaFactory& factory) {
  return closure(std::vector<Formula>{f}, factory);
}

ClosureIndex::ClosureIndex(const std::vector<Formula>& theta, FormulaFactory& factory)
    : factory_(&factory), inputs_(theta) {
  std::vector<Formula> bases;
  for (Formula f : theta) {
    input_size_ += f.size();
    agents_ = agents_ | agents_of(f);
    for (Formula g : subformulas(f)) {
      if (g.is(Op::Not)) continue;
      bases.push_back(g);
      if (g.is(Op::Common)) {
        for (AgentId a : g.coalition().members()) bases.push_back(factory.dist(Coalition::singleton(a), g));
      }
    }
  }
  sort_canonical(bases);
  bases_ = std::move(bases);
  for (std::uint32_t i = 0; i < bases_.size(); ++i) base_index_.emplace(bases_[i], i);

  const std::size_t n = bases_.size();
  lit_formula_.resize(2 * n);
  kind_.resize(2 * n);
  components_.resize(2 * n);
  body_.resize(n);
  dc_subs_.resize(n);

  for (std::uint32_t b = 0; b < n; ++b) {
    Formula f = bases_[b];
    Literal pos(b, false);
    Literal neg(b, true);
    lit_formula_[pos.code()] = f;
    lit_formula_[neg.code()] = factory.neg(f);
    auto& pc = components_[pos.code()];
    auto& nc = components_[neg.code()];
    switch (f.op()) {
      case Op::Atom:
        kind_[pos.code()] = FormulaKind::Literal;
        kind_[neg.code()] = FormulaKind::NegLiteral;
        break;
      case Op::And:
        kind_[pos.code()] = FormulaKind::Alpha;
        kind_[neg.code()] = FormulaKind::Beta;
        pc = {strip(f.lhs()), strip(f.rhs())};
        nc = {~strip(f.lhs()), ~strip(f.rhs())};
        break;
      case Op::Dist:
        kind_[pos.code()] = FormulaKind::Alpha;
        kind_[neg.code()] = FormulaKind::DiamondD;
        body_[b] = strip(f.body());
        pc = {body_[b]};
        break;
      case Op::Common:
        kind_[pos.code()] = FormulaKind::Alpha;
        kind_[neg.code()] = FormulaKind::Beta;
        body_[b] = strip(f.body());
        pc.push_back(body_[b]);
        nc.push_back(~body_[b]);
        for (AgentId a : f.coalition().members()) {
          Literal d = literal(factory.dist(Coalition::singleton(a), f));
          pc.push_back(d);
          nc.push_back(~d);
        }
        break;
      case Op::Not:
        throw LogicError("negation stored as closure base");
    }
    std::set<std::uint32_t> dcs;
    for (Formula g : subformulas(f)) {
      if (g.is(Op::Dist) || g.is(Op::Common)) dcs.insert(base_index_.at(g));
    }
    dc_subs_[b].assign(dcs.begin(), dcs.end());
  }

  by_rank_.reserve(2 * n);
  for (std::uint32_t c = 0; c < 2 * n; ++c) by_rank_.push_back(Literal::from_code(c));
  std::sort(by_rank_.begin(), by_rank_.end(), [this](Literal x, Literal y) {
    return canonical_compare(lit_formula_[x.code()], lit_formula_[y.code()]) < 0;
  });
  rank_.resize(2 * n);
  for (std::uint32_t r = 0; r < 2 * n; ++r) rank_[by_rank_[r].code()] = r;
}

Literal ClosureIndex::strip(Formula f) const {
  bool neg = false;
  while (f.is(Op::Not)) {
    neg = !neg;
    f = f.body();
  }
  auto it = base_index_.find(f);
  if (it == base_index_.end()) throw LogicError("formula outside the extended closure");
  return Literal(it->second, neg);
}

std::optional<Literal> ClosureIndex::find(Formula f) const {
  while (f.is(Op::Not) && f.body().is(Op::Not)) f = f.body().body();
  Formula g = f.is(Op::Not) ? f.body() : f;
  auto it = base_index_.find(g);
  if (it == base_index_.end()) return std::nullopt;
  return Literal(it->second, f.is(Op::Not));
}

Literal ClosureIndex::literal(Formula f) const { return strip(f); }

std::string ClosureIndex::print(Literal l) const { return emltab::print(formula(l), *factory_); }

ClosureIndex extended_closure(const std::vector<Formula>& theta, FormulaFactory& factory) {
  return ClosureIndex(theta, factory);
}

}  // namespace emltab
