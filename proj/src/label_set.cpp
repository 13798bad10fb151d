#include "emltab/label_set.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

namespace emltab {

std::vector<Literal> LabelSet::literals() const {
  std::vector<Literal> out;
  out.reserve(count());
  for (std::size_t b = 0; b < pos_.size(); ++b) {
    if (pos_.test(b)) out.emplace_back(static_cast<std::uint32_t>(b), false);
    if (neg_.test(b)) out.emplace_back(static_cast<std::uint32_t>(b), true);
  }
  return out;
}

std::size_t LabelSet::hash() const {
  std::size_t h = boost::hash_value(pos_);
  boost::hash_combine(h, boost::hash_value(neg_));
  return h;
}

LabelSet make_label(const ClosureIndex& index, const std::vector<Formula>& fs) {
  LabelSet s(index.base_count());
  for (Formula f : fs) s.insert(index.literal(f));
  return s;
}

std::vector<Literal> sorted_literals(const ClosureIndex& index, const LabelSet& s) {
  std::vector<Literal> lits = s.literals();
  std::sort(lits.begin(), lits.end(), [&](Literal a, Literal b) { return index.rank(a) < index.rank(b); });
  return lits;
}

std::vector<Formula> label_formulas(const ClosureIndex& index, const LabelSet& s) {
  std::vector<Formula> out;
  for (Literal l : sorted_literals(index, s)) out.push_back(index.formula(l));
  return out;
}

std::string print_label(const ClosureIndex& index, const LabelSet& s) {
  std::string out = "{";
  bool first = true;
  for (Literal l : sorted_literals(index, s)) {
    if (!first) out += ", ";
    first = false;
    out += index.print(l);
  }
  return out + "}";
}

bool label_less(const ClosureIndex& index, const LabelSet& a, const LabelSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto la = sorted_literals(index, a);
  auto lb = sorted_literals(index, b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(),
                                      [&](Literal x, Literal y) { return index.rank(x) < index.rank(y); });
}

}  // namespace emltab
