#pragma once

// Shared test helpers: randomized generators over dyadic rationals, and the
// numeric quadrature oracle for the metric. Everything here is test-only
// and deliberately independent of the library's closed-form code paths.

#include "waveset/waveset.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using namespace waveset;

inline Rational dyadic(std::mt19937& rng, int denom_bits, const Rational& lo,
                       const Rational& hi) {
  long long den = 1LL << denom_bits;
  long long lo_n = (numerator(lo * den) / denominator(lo * den)).convert_to<long long>();
  long long hi_n = (numerator(hi * den) / denominator(hi * den)).convert_to<long long>();
  std::uniform_int_distribution<long long> dist(lo_n, hi_n);
  return Rational(dist(rng), den);
}

// Random WI1 map: random dyadic partitions of [1/2,1) and [0,1/2), each
// block assigned a contraction depth k in [1,5].
inline PiecewiseMap random_wi1(std::mt19937& rng) {
  std::vector<AffinePiece> pieces;
  std::uniform_int_distribution<int> n_cuts(0, 3), depth(1, 5);
  for (bool right : {true, false}) {
    Rational lo = right ? rat(1, 2) : rat(0);
    Rational hi = right ? rat(1) : rat(1, 2);
    std::set<Rational> cuts{lo, hi};
    int n = n_cuts(rng);
    while (static_cast<int>(cuts.size()) < n + 2)
      cuts.insert(dyadic(rng, 6, lo, hi));
    auto it = cuts.begin();
    Rational prev = *it++;
    for (; it != cuts.end(); ++it) {
      int k = depth(rng);
      Rational m = right ? rat(0) : Rational(1 - pow2(-k));
      pieces.emplace_back(Interval(prev, *it), -k, m);
      prev = *it;
    }
  }
  return PiecewiseMap(std::move(pieces));
}

// Random canonical union of dyadic intervals inside [lo, hi).
inline IntervalSet random_dyadic_subset(std::mt19937& rng, const Rational& lo,
                                        const Rational& hi, int max_parts = 4) {
  std::uniform_int_distribution<int> n_parts(1, max_parts);
  std::vector<Interval> ivs;
  int n = n_parts(rng);
  for (int i = 0; i < n; ++i) {
    Rational a = dyadic(rng, 6, lo, hi);
    Rational b = dyadic(rng, 6, lo, hi);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ivs.emplace_back(a, b);
  }
  if (ivs.empty()) ivs.emplace_back(lo, (lo + hi) / 2);
  return IntervalSet(std::move(ivs));
}

// Composite Simpson quadrature of 1/|x| over one interval.
inline double simpson_inv_abs(double a, double b, int panels = 4000) {
  auto f = [](double x) { return 1.0 / std::fabs(x); };
  double h = (b - a) / (2 * panels);
  double total = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i)
    total += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return total * h / 3.0;
}

// Numeric evaluation of the wavelet-set metric straight from its definition:
// Lebesgue measure of the symmetric difference plus quadrature of 1/|x|,
// both on the true (pi-scaled) line.
inline double metric_quadrature_oracle(const FreqSet& w1, const FreqSet& w2) {
  IntervalSet sd = symmetric_difference(w1.body, w2.body);
  double mu = 0.0, lambda = 0.0;
  for (const Interval& iv : sd.intervals()) {
    double a = std::numbers::pi * to_double(iv.lo);
    double b = std::numbers::pi * to_double(iv.hi);
    mu += b - a;
    lambda += simpson_inv_abs(a, b);
  }
  return std::sqrt(mu) + std::sqrt(lambda);
}

// Brute-force tiling oracle: counts, for exact sample points, how many even
// translates (resp. dyadic dilates) of w cover the point. A wavelet set
// must give count 1 everywhere.
inline long translation_cover_count(const FreqSet& w, const Rational& x) {
  long count = 0;
  for (const Interval& iv : w.body.intervals()) {
    // integers m with x + 2m in [lo, hi)
    BigInt first = ceil_int((iv.lo - x) / 2);
    BigInt last = ceil_int((iv.hi - x) / 2);
    if (last > first) count += (last - first).convert_to<long>();
  }
  return count;
}

inline long dilation_cover_count(const FreqSet& w, const Rational& x) {
  long count = 0;
  for (int k = -70; k <= 70; ++k) {
    Rational y = (k >= 0) ? Rational(x * Rational(BigInt(1) << k))
                          : Rational(x / Rational(BigInt(1) << -k));
    if (w.body.contains(y)) ++count;
  }
  return count;
}

}  // namespace testsupport
