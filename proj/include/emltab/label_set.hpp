#ifndef EMLTAB_LABEL_SET_HPP
#define EMLTAB_LABEL_SET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "emltab/closure.hpp"

namespace emltab {

/// A finite set of closure literals, stored as one bit per sign per base.
class LabelSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  LabelSet() = default;
  explicit LabelSet(std::size_t base_count) : pos_(base_count), neg_(base_count) {}

  std::size_t base_count() const { return pos_.size(); }

  bool contains(Literal l) const { return (l.negative() ? neg_ : pos_).test(l.base()); }
  /// Returns true when the literal was not present before.
  bool insert(Literal l) {
    Bits& side = l.negative() ? neg_ : pos_;
    if (side.test(l.base())) return false;
    side.set(l.base());
    return true;
  }
  void erase(Literal l) { (l.negative() ? neg_ : pos_).reset(l.base()); }

  bool decided(std::uint32_t base) const { return pos_.test(base) || neg_.test(base); }

  /// True when some formula occurs together with its negation.
  bool inconsistent() const { return pos_.intersects(neg_); }

  bool subset_of(const LabelSet& o) const { return pos_.is_subset_of(o.pos_) && neg_.is_subset_of(o.neg_); }
  bool empty() const { return pos_.none() && neg_.none(); }
  std::size_t count() const { return pos_.count() + neg_.count(); }

  const Bits& positive() const { return pos_; }
  const Bits& negative() const { return neg_; }

  /// Members ordered by literal code.
  std::vector<Literal> literals() const;

  bool operator==(const LabelSet&) const = default;

  std::size_t hash() const;

 private:
  Bits pos_;
  Bits neg_;
};

/// Calls fn(base) for each set bit in ascending order.
template <class Fn>
void for_each_bit(const LabelSet::Bits& bits, Fn&& fn) {
  for (auto i = bits.find_first(); i != LabelSet::Bits::npos; i = bits.find_next(i)) {
    fn(static_cast<std::uint32_t>(i));
  }
}

struct LabelSetHash {
  std::size_t operator()(const LabelSet& s) const { return s.hash(); }
};

LabelSet make_label(const ClosureIndex& index, const std::vector<Formula>& fs);
std::vector<Formula> label_formulas(const ClosureIndex& index, const LabelSet& s);
/// Members in canonical formula order.
std::vector<Literal> sorted_literals(const ClosureIndex& index, const LabelSet& s);
/// "{p, ~q}" with members in canonical order.
std::string print_label(const ClosureIndex& index, const LabelSet& s);

/// Total order used for families of sets: by cardinality, then by the
/// canonical member sequences.
bool label_less(const ClosureIndex& index, const LabelSet& a, const LabelSet& b);

}  // namespace emltab

#endif  // EMLTAB_LABEL_SET_HPP
