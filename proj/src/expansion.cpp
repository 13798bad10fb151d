#include "emltab/expansion.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace emltab {

const char* to_string(CutMode m) {
  switch (m) {
    case CutMode::Restricted: return "restricted";
    case CutMode::Unrestricted: return "unrestricted";
    case CutMode::NoCut: return "no-cut";
  }
  return "?";
}

std::optional<CutMode> parse_cut_mode(std::string_view s) {
  if (s == "restricted") return CutMode::Restricted;
  if (s == "unrestricted") return CutMode::Unrestricted;
  if (s == "no-cut" || s == "nocut") return CutMode::NoCut;
  return std::nullopt;
}

namespace {

using Bits = LabelSet::Bits;

// A set under construction plus the eventualities whose branching has
// already been decided on this branch.
struct Branch {
  LabelSet set;
  Bits handled;
  bool operator==(const Branch&) const = default;
};

struct BranchHash {
  std::size_t operator()(const Branch& b) const {
    std::size_t h = b.set.hash();
    boost::hash_combine(h, boost::hash_value(b.handled));
    return h;
  }
};

bool has_any(const LabelSet& s, std::span<const Literal> lits) {
  return std::any_of(lits.begin(), lits.end(), [&](Literal l) { return s.contains(l); });
}

// Adds every missing alpha component until nothing changes.
bool saturate_alpha(const ClosureIndex& index, LabelSet& s) {
  bool changed_any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Literal l : s.literals()) {
      if (index.kind(l) != FormulaKind::Alpha) continue;
      for (Literal c : index.components(l)) changed |= s.insert(c);
    }
    changed_any |= changed;
  }
  return changed_any;
}

Family sorted_family(const ClosureIndex& index, std::vector<LabelSet> sets) {
  std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keys;
  keys.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::uint32_t> k;
    for (Literal l : sorted_literals(index, sets[i])) k.push_back(index.rank(l));
    keys.emplace_back(std::move(k), i);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  Family out;
  out.reserve(sets.size());
  for (const auto& [k, i] : keys) out.push_back(std::move(sets[i]));
  return out;
}

Family expand(const ClosureIndex& index, const LabelSet& gamma, std::optional<CutMode> cut,
              const Deadline& deadline) {
  std::vector<Branch> stack;
  std::unordered_set<Branch, BranchHash> visited;
  std::unordered_set<LabelSet, LabelSetHash> results;

  auto push = [&](Branch b) {
    if (b.set.inconsistent()) return;
    if (visited.insert(b).second) stack.push_back(std::move(b));
  };
  push(Branch{gamma, Bits(index.base_count())});

  deadline.check();
  std::size_t steps = 0;
  while (!stack.empty()) {
    if ((++steps & 0xff) == 0) deadline.check();
    Branch b = std::move(stack.back());
    stack.pop_back();

    bool done = false;
    while (!done) {
      if (b.set.inconsistent()) break;

      // Eventualities first.  With no component present the branch splits
      // over all of them; with some other component present but not the
      // local one, the local one is added on a second branch.
      bool branched = false;
      for (auto e = b.set.negative().find_first(); e != Bits::npos; e = b.set.negative().find_next(e)) {
        const auto base = static_cast<std::uint32_t>(e);
        if (index.base_op(base) != Op::Common || b.handled.test(base)) continue;
        auto comps = index.components(Literal(base, true));
        Literal local = comps.front();
        Bits handled = b.handled;
        handled.set(base);
        if (!has_any(b.set, comps)) {
          for (Literal c : comps) {
            Branch nb{b.set, handled};
            nb.set.insert(c);
            push(std::move(nb));
          }
          branched = true;
          break;
        }
        if (b.set.contains(local)) {
          b.handled = std::move(handled);
          continue;
        }
        Branch with_local{b.set, handled};
        with_local.set.insert(local);
        push(Branch{b.set, handled});
        push(std::move(with_local));
        branched = true;
        break;
      }
      if (branched) break;

      if (saturate_alpha(index, b.set)) continue;

      for (auto e = b.set.negative().find_first(); e != Bits::npos; e = b.set.negative().find_next(e)) {
        const auto base = static_cast<std::uint32_t>(e);
        if (index.base_op(base) != Op::And) continue;
        auto comps = index.components(Literal(base, true));
        if (has_any(b.set, comps)) continue;
        for (Literal c : comps) {
          Branch nb{b.set, b.handled};
          nb.set.insert(c);
          push(std::move(nb));
        }
        branched = true;
        break;
      }
      if (branched) break;

      if (cut) {
        auto targets = cut_targets(index, b.set, *cut);
        if (!targets.empty()) {
          Branch yes = b;
          Branch no = b;
          yes.set.insert(Literal(targets.back(), false));
          no.set.insert(Literal(targets.back(), true));
          push(std::move(yes));
          push(std::move(no));
          break;
        }
      }

      results.insert(b.set);
      done = true;
    }
  }
  return sorted_family(index, {results.begin(), results.end()});
}

}  // namespace

Family full_expansions(const ClosureIndex& index, const LabelSet& gamma, const Deadline& deadline) {
  return expand(index, gamma, std::nullopt, deadline);
}

Family cs_expansions(const ClosureIndex& index, const LabelSet& gamma, CutMode mode, const Deadline& deadline) {
  if (mode == CutMode::NoCut) return expand(index, gamma, std::nullopt, deadline);
  return expand(index, gamma, mode, deadline);
}

std::vector<std::uint32_t> cut_targets(const ClosureIndex& index, const LabelSet& phi, CutMode mode) {
  std::vector<std::uint32_t> out;
  if (mode == CutMode::NoCut) return out;

  std::vector<Coalition> diamonds;
  for_each_bit(phi.negative(), [&](std::uint32_t b) {
    if (index.base_op(b) == Op::Dist) diamonds.push_back(index.coalition(b));
  });
  if (mode == CutMode::Restricted && diamonds.empty()) return out;

  auto exists_e = [&](auto pred) { return std::any_of(diamonds.begin(), diamonds.end(), pred); };

  auto consider = [&](Literal psi) {
    const std::uint32_t pb = psi.base();
    const Op pop = index.base_op(pb);
    bool d_type = pop == Op::Dist;
    bool ev_type = pop == Op::Common && psi.negative();
    if (mode == CutMode::Restricted && !d_type && !ev_type) return;
    for (std::uint32_t t : index.dc_subformulas(pb)) {
      if (phi.decided(t)) continue;
      if (mode == CutMode::Restricted) {
        const Coalition a = index.coalition(t);
        const Coalition b = index.coalition(pb);
        bool ok;
        if (index.base_op(t) == Op::Dist) {
          ok = d_type ? exists_e([&](Coalition e) { return a.subset_of(e) && b.subset_of(e); })
                      : exists_e([&](Coalition e) { return a.subset_of(e) && b.intersects(e); });
        } else {
          ok = d_type ? exists_e([&](Coalition e) { return b.subset_of(e) && a.intersects(e); })
                      : exists_e([&](Coalition e) { return a.intersects(e) && b.intersects(e); });
        }
        if (!ok) continue;
      }
      out.push_back(t);
    }
  };
  for (Literal l : phi.literals()) consider(l);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Formula> cut_target_formulas(const ClosureIndex& index, const LabelSet& phi, CutMode mode) {
  std::vector<Formula> out;
  for (std::uint32_t t : cut_targets(index, phi, mode)) out.push_back(index.base(t));
  return out;
}

bool fully_expanded(const ClosureIndex& index, const LabelSet& s) {
  if (s.inconsistent()) return false;
  for (Literal l : s.literals()) {
    auto comps = index.components(l);
    switch (index.kind(l)) {
      case FormulaKind::Alpha:
        for (Literal c : comps) {
          if (!s.contains(c)) return false;
        }
        break;
      case FormulaKind::Beta:
        if (!has_any(s, comps)) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

}  // namespace emltab
