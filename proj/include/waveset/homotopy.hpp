#pragma once

// Paths of wavelet sets. A factor pair (u, v) is fixed once per path; v is
// deformed to the identity through a chain of WI2 maps, switching the sets
// V, v(V), v^2(V), ... to the identity one stage at a time, and the path is
// sampled by recombining u with the deformed v and synthesizing the result.
//
// Stage n occupies the parameter window [1 - 2^{1-n}, 1 - 2^{-n}); within a
// stage the switch front moves through v^{n-1}(V) by measure, so the set
// changed between parameters t < s has measure at most |t - s|.

#include "waveset/scb.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace waveset {

struct ChainParams {
  PiecewiseMap v0;
  int max_stage = 32;
};

struct ChainResult {
  PiecewiseMap map;
  int stage = 0;          // stage containing t (0 at the endpoints)
  Rational local_param;   // position inside the stage window, in [0,1)
  bool clamped = false;   // t needed a stage beyond max_stage
};

namespace detail {

// Prefix of s holding exactly `fraction` of its measure, taken from the left.
inline IntervalSet measure_prefix(const IntervalSet& s, const Rational& fraction) {
  Rational target = fraction * s.measure();
  std::vector<Interval> out;
  for (const Interval& iv : s.intervals()) {
    if (target <= 0) break;
    if (iv.length() <= target) {
      out.push_back(iv);
      target -= iv.length();
    } else {
      out.emplace_back(iv.lo, iv.lo + target);
      target = 0;
    }
  }
  return IntervalSet(std::move(out));
}

inline ChainResult chain_core(const PiecewiseMap& v0, int max_stage,
                              const Rational& t) {
  if (t < 0 || t > 1)
    throw std::invalid_argument("chain parameter outside [0,1]");
  ChainResult res;
  if (t == 1 || identity_shaped(v0)) {
    res.map = PiecewiseMap::identity();
    res.local_param = 0;
    return res;
  }
  if (t == 0) {
    res.map = v0;
    res.local_param = 0;
    return res;
  }

  IntervalSet v_range = v0.range();
  IntervalSet seed = set_difference(unit_interval(), v_range);

  // Stage n covers t in [1 - 2^{1-n}, 1 - 2^{-n}).
  int n = floor_log2(1 / (1 - t)) + 1;
  Rational local = (t - (1 - pow2(1 - n))) * pow2(n);
  bool clamped = n > max_stage;
  int full_stages = clamped ? max_stage : n - 1;

  IntervalSet switched;
  IntervalSet front = seed;
  for (int j = 0; j < full_stages; ++j) {
    switched = set_union(switched, front);
    front = image(v0, front);
  }
  if (!clamped) switched = set_union(switched, measure_prefix(front, local));

  std::vector<AffinePiece> pieces;
  for (const Interval& iv : switched.intervals())
    pieces.emplace_back(iv, 0, rat(0));
  PiecewiseMap kept = restrict(v0, set_difference(v0.domain(), switched));
  for (const AffinePiece& p : kept.pieces()) pieces.push_back(p);

  res.map = PiecewiseMap(std::move(pieces));
  res.stage = n;
  res.local_param = local;
  res.clamped = clamped;
  return res;
}

}  // namespace detail

// The deformation v_t: v at t = 0, identity at t = 1, always injective and
// WI2 (identity pieces are (x+0)/2^0).
inline ChainResult chain_v(const ChainParams& params, const Rational& t) {
  if (!classify(params.v0).in_wi2)
    throw std::domain_error("chain_v: v0 is not a WI2 map");
  return detail::chain_core(params.v0, params.max_stage, t);
}

// The weighted measure with density 1/(1-x) on [0,1/2) and 1/x on [1/2,1);
// equals the 1/|x| integral of the xi-preimage.
inline double nu_measure(const IntervalSet& s) {
  if (!is_subset(s, unit_interval()))
    throw std::domain_error("nu_measure: set not contained in [0,1)");
  const Rational half = rat(1, 2);
  double total = 0.0;
  for (const Interval& iv : s.intervals()) {
    Rational left_hi = std::min(iv.hi, half);
    if (iv.lo < half)
      total += std::log(to_double((1 - iv.lo) / (1 - left_hi)));
    Rational right_lo = std::max(iv.lo, half);
    if (iv.hi > half) total += std::log(to_double(iv.hi / right_lo));
  }
  return total;
}

// The wavelet-set metric computed entirely at the isomorphism level:
// sqrt(4 pi mu(omega')) + sqrt(2 nu(omega)), with omega the disagreement of
// the maps and omega' the disagreement of their inverses. Agrees with
// metric_d on the corresponding wavelet sets.
inline double metric_via_isomorphisms(const PiecewiseMap& h1,
                                      const PiecewiseMap& h2) {
  if (!classify(h1).in_wi || !classify(h2).in_wi)
    throw std::domain_error(
        "metric_via_isomorphisms: arguments must be wavelet-induced "
        "isomorphisms");
  IntervalSet omega = disagreement_set(h1, h2);
  IntervalSet omega_prime = disagreement_set(invert(h1), invert(h2));
  double mu_term = 4.0 * std::numbers::pi * to_double(omega_prime.measure());
  return std::sqrt(mu_term) + std::sqrt(2.0 * nu_measure(omega));
}

// A path of wavelet sets from w to the Littlewood-Paley set. The
// factorization of the induced isomorphism is computed once; each sample
// recombines u with the deformed v and synthesizes the resolved prefix.
// The internal combine tolerance is tightened by the largest dilation
// exponent of v so that the synthesized tiling defect stays below 2 tol.
class WaveletPath {
 public:
  WaveletPath(FreqSet w, Rational tol, int max_stage = 32)
      : w0_(std::move(w)), tol_(std::move(tol)), max_stage_(max_stage) {
    if (tol_ <= 0) throw std::invalid_argument("path tolerance must be positive");
    PiecewiseMap h0 = induced_isomorphism(w0_);  // verifies w
    FactorizeResult fac = factorize(h0, tol_ / 4);
    u_ = std::move(fac.u);
    v_ = std::move(fac.v.map);
    int kmax = 0;
    for (const AffinePiece& p : v_.pieces()) kmax = std::max(kmax, -p.e);
    combine_tol_ = tol_ * pow2(-(kmax + 2));
  }

  const FreqSet& start() const { return w0_; }
  const PiecewiseMap& factor_u() const { return u_; }
  const PiecewiseMap& factor_v() const { return v_; }

  // Truncated isomorphism u <> v_t.
  CombineResult isomorphism_at(const Rational& t) const {
    PiecewiseMap vt = detail::chain_core(v_, max_stage_, t).map;
    return detail::combine_core(u_, vt, combine_tol_, kDefaultCombineDepthCap,
                                {});
  }

  FreqSet at(const Rational& t) const {
    return synthesize_prefix(isomorphism_at(t).map.map);
  }

 private:
  FreqSet w0_;
  Rational tol_;
  int max_stage_;
  PiecewiseMap u_;
  PiecewiseMap v_;
  Rational combine_tol_;
};

inline FreqSet path_wavelet_set(const FreqSet& w, const Rational& t,
                                const Rational& tol) {
  return WaveletPath(w, tol).at(t);
}

}  // namespace waveset
