#pragma once

// Canonical finite unions of half-open intervals [lo, hi) with rational
// endpoints. The canonical form (sorted, pairwise disjoint, adjacent runs
// merged) makes set equality a componentwise comparison, which the rest of
// the library relies on for its exact round-trip checks.

#include "waveset/rational.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace waveset {

struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo >= hi)
      throw std::domain_error("malformed interval [" + waveset::to_string(lo) +
                              ", " + waveset::to_string(hi) + ")");
  }

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x < hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

class IntervalSet {
 public:
  IntervalSet() = default;

  // Canonicalizes an arbitrary list of intervals (overlaps and adjacency
  // merged). Each raw interval must already satisfy lo < hi.
  explicit IntervalSet(std::vector<Interval> raw) {
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    for (const Interval& iv : raw) {
      if (!ivs_.empty() && iv.lo <= ivs_.back().hi) {
        if (iv.hi > ivs_.back().hi) ivs_.back().hi = iv.hi;
      } else {
        ivs_.push_back(iv);
      }
    }
  }

  static IntervalSet of(const Rational& lo, const Rational& hi) {
    return IntervalSet({Interval(lo, hi)});
  }

  bool empty() const { return ivs_.empty(); }
  std::size_t size() const { return ivs_.size(); }
  const std::vector<Interval>& intervals() const { return ivs_; }

  bool contains(const Rational& x) const {
    auto it = std::upper_bound(
        ivs_.begin(), ivs_.end(), x,
        [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    return it != ivs_.begin() && std::prev(it)->contains(x);
  }

  Rational measure() const {
    Rational total = 0;
    for (const Interval& iv : ivs_) total += iv.length();
    return total;
  }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

 private:
  std::vector<Interval> ivs_;  // canonical: sorted, disjoint, gaps between
};

inline IntervalSet normalize(std::vector<Interval> raw) {
  return IntervalSet(std::move(raw));
}

enum class SetOp { kUnion, kIntersect, kDifference, kSymdiff };

namespace detail {

// Boolean combination by segment sweep over the merged endpoint grid.
template <typename Keep>
IntervalSet combine_sets(const IntervalSet& a, const IntervalSet& b, Keep keep) {
  std::vector<Rational> cuts;
  for (const IntervalSet* s : {&a, &b})
    for (const Interval& iv : s->intervals()) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (keep(a.contains(mid), b.contains(mid)))
      out.emplace_back(cuts[i], cuts[i + 1]);
  }
  return IntervalSet(std::move(out));
}

}  // namespace detail

inline IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  return detail::combine_sets(a, b, [](bool x, bool y) { return x || y; });
}

inline IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  return detail::combine_sets(a, b, [](bool x, bool y) { return x && y; });
}

inline IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return detail::combine_sets(a, b, [](bool x, bool y) { return x && !y; });
}

inline IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
  return detail::combine_sets(a, b, [](bool x, bool y) { return x != y; });
}

inline IntervalSet set_algebra(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  switch (op) {
    case SetOp::kUnion: return set_union(a, b);
    case SetOp::kIntersect: return set_intersection(a, b);
    case SetOp::kDifference: return set_difference(a, b);
    case SetOp::kSymdiff: return symmetric_difference(a, b);
  }
  throw std::invalid_argument("unknown set operation");
}

inline bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_difference(a, b).empty();
}

inline Rational measure(const IntervalSet& s) { return s.measure(); }

// Exact image {2^e x + m : x in s}; scales measure by 2^e.
inline IntervalSet affine_image(const IntervalSet& s, int e, const Rational& m) {
  Rational f = pow2(e);
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const Interval& iv : s.intervals())
    out.emplace_back(f * iv.lo + m, f * iv.hi + m);
  return IntervalSet(std::move(out));
}

// Exact preimage {x : 2^e x + m in s}.
inline IntervalSet affine_preimage(const IntervalSet& s, int e, const Rational& m) {
  Rational f = pow2(-e);
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const Interval& iv : s.intervals())
    out.emplace_back(f * (iv.lo - m), f * (iv.hi - m));
  return IntervalSet(std::move(out));
}

// Integral of 1/|x| over s, as a sum of per-interval logarithm closed forms.
// Intervals touching 0 are rejected (the integral diverges there).
inline double log_integral(const IntervalSet& s) {
  double total = 0.0;
  for (const Interval& iv : s.intervals()) {
    if (iv.lo > 0)
      total += std::log(to_double(iv.hi / iv.lo));
    else if (iv.hi < 0)
      total += std::log(to_double(iv.lo / iv.hi));
    else
      throw std::domain_error("log_integral: interval touches 0");
  }
  return total;
}

}  // namespace waveset
