#include "emltab/generator.hpp"

#include <stdexcept>

#include "emltab/parser.hpp"

namespace emltab {

FormulaGenerator::FormulaGenerator(GenParams params, FormulaFactory& factory)
    : params_(std::move(params)), factory_(factory), rng_(params_.seed) {
  if (params_.agents.empty() || params_.atoms.empty()) throw std::invalid_argument("generator needs agents and atoms");
  if (params_.agents.size() > kMaxAgents) throw std::invalid_argument("too many agents");
  for (const auto& a : params_.agents) factory_.agent(a);
}

Formula FormulaGenerator::next() { return gen(params_.max_depth); }

Formula FormulaGenerator::gen(int depth) {
  const auto& w = params_.weights;
  if (depth <= 0) {
    Formula p = factory_.atom(params_.atoms[below(params_.atoms.size())]);
    return below(2) == 0 ? p : factory_.neg(p);
  }
  const std::uint64_t total = std::uint64_t{w.atom} + w.neg + w.conj + w.dist + w.common;
  if (total == 0) return gen(0);
  std::uint64_t r = below(total);
  if (r < w.atom) return gen(0);
  r -= w.atom;
  if (r < w.neg) return factory_.neg(gen(depth - 1));
  r -= w.neg;
  if (r < w.conj) {
    Formula l = gen(depth - 1);
    return factory_.conj(l, gen(depth - 1));
  }
  r -= w.conj;
  // Random non-empty subset of the agents.
  const std::uint64_t span = (std::uint64_t{1} << params_.agents.size()) - 1;
  const auto mask = static_cast<std::uint32_t>(below(span) + 1);
  Coalition c;
  for (std::size_t i = 0; i < params_.agents.size(); ++i) {
    if ((mask >> i) & 1U) c = c | Coalition::singleton(factory_.agent(params_.agents[i]));
  }
  Formula body = gen(depth - 1);
  return r < w.dist ? factory_.dist(c, body) : factory_.common(c, body);
}

std::vector<std::string> generate_corpus(const GenParams& params, std::size_t count) {
  FormulaFactory factory;
  FormulaGenerator gen(params, factory);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(print(gen.next(), factory));
  return out;
}

Formula fixpoint_family(Coalition a, Formula f, FormulaFactory& factory) {
  if (a.empty()) throw LogicError("empty coalition");
  Formula c = factory.common(a, f);
  std::vector<Formula> parts{f};
  for (AgentId x : a.members()) parts.push_back(factory.dist(Coalition::singleton(x), c));
  return factory.neg(factory.iff(c, factory.conj_all(parts)));
}

}  // namespace emltab
