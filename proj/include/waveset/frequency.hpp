#pragma once

// The frequency line, stored in units of pi so that every endpoint of
// interest is an exact rational. E = [-2,-1) u [1,2) is the fundamental
// domain for both the translation reduction tau (by even shifts) and the
// dilation reduction delta (by powers of two). A set tiles the line iff its
// tau-fragments cover [0,2) exactly once and its delta-fragments cover E
// exactly once; the verifier checks both with exact arithmetic.

#include "waveset/interval_set.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace waveset {

// Interval set on the frequency line; a point x is stored as x/pi.
struct FreqSet {
  IntervalSet body;

  FreqSet() = default;
  explicit FreqSet(IntervalSet b) : body(std::move(b)) {}

  Rational measure_pi_units() const { return body.measure(); }
  friend bool operator==(const FreqSet& a, const FreqSet& b) = default;
};

// Littlewood-Paley set E = [-2,-1) u [1,2) in pi-units.
inline const FreqSet& littlewood_paley() {
  static const FreqSet e{IntervalSet(
      {Interval(rat(-2), rat(-1)), Interval(rat(1), rat(2))})};
  return e;
}

struct TauResult {
  Rational value;  // x + 2j, lies in E
  BigInt j;
};

// Translation reduction: the unique even shift taking x into E.
inline TauResult tau_point(const Rational& x) {
  BigInt f = floor_int(x / 2);
  Rational r = x - 2 * Rational(f);  // in [0,2)
  if (r >= 1) return {r, -f};
  return {r - 2, -f - 1};
}

struct DeltaResult {
  Rational value;  // 2^k x, lies in E
  int k;
};

// Dilation reduction: the unique dyadic scale taking x != 0 into E.
// Positive x in [2^n, 2^{n+1}) and negative x in [-2^{n+1}, -2^n) both
// reduce by 2^{-n}.
inline DeltaResult delta_point(const Rational& x) {
  if (x == 0) throw std::domain_error("delta undefined at 0");
  int n;
  if (x > 0) {
    n = floor_log2(x);
  } else {
    Rational a = -x;
    n = floor_log2(a);
    if (pow2(n) == a) --n;  // negative bands are (2^n, 2^{n+1}] in magnitude
  }
  return {pow2(-n) * x, -n};
}

// xi identifies E with [0,1): x/2 on [1,2), x/2 + 1 on [-2,-1).
inline IntervalSet xi(const FreqSet& s) {
  std::vector<Interval> out;
  for (const Interval& iv : s.body.intervals()) {
    if (iv.lo >= 1 && iv.hi <= 2)
      out.emplace_back(iv.lo / 2, iv.hi / 2);
    else if (iv.lo >= -2 && iv.hi <= -1)
      out.emplace_back(iv.lo / 2 + 1, iv.hi / 2 + 1);
    else
      throw std::domain_error("xi: argument not contained in E");
  }
  return IntervalSet(std::move(out));
}

inline FreqSet xi_inv(const IntervalSet& s) {
  std::vector<Interval> out;
  for (const Interval& iv : s.intervals()) {
    if (iv.hi <= rat(1, 2) && iv.lo >= 0)
      out.emplace_back(2 * iv.lo - 2, 2 * iv.hi - 2);
    else if (iv.lo >= rat(1, 2) && iv.hi <= 1)
      out.emplace_back(2 * iv.lo, 2 * iv.hi);
    else if (iv.lo >= 0 && iv.hi <= 1) {
      out.emplace_back(2 * iv.lo - 2, -1);
      out.emplace_back(1, 2 * iv.hi);
    } else {
      throw std::domain_error("xi_inv: argument not contained in [0,1)");
    }
  }
  return FreqSet(IntervalSet(std::move(out)));
}

namespace detail {

struct Fragment {
  Interval reduced;   // image in the reduction target
  Interval source;    // the piece of w it came from
  int scale_e = 0;    // delta only: reduced = 2^{scale_e} * source
  Rational shift = 0; // tau only: reduced = source + shift
};

inline void require_bounded_away_from_zero(const FreqSet& w) {
  for (const Interval& iv : w.body.intervals())
    if (!(iv.lo > 0 || iv.hi < 0))
      throw std::domain_error("set must be bounded away from 0");
}

// Split w at even integers and shift every fragment into [0,2).
inline std::vector<Fragment> translation_fragments(const FreqSet& w) {
  std::vector<Fragment> frags;
  for (const Interval& iv : w.body.intervals()) {
    BigInt m = floor_int(iv.lo / 2);
    Rational cursor = iv.lo;
    while (cursor < iv.hi) {
      Rational block_end = 2 * (Rational(m) + 1);
      Rational end = std::min(block_end, iv.hi);
      Rational shift = -2 * Rational(m);
      frags.push_back({Interval(cursor + shift, end + shift),
                       Interval(cursor, end), 0, shift});
      cursor = end;
      ++m;
    }
  }
  return frags;
}

// Split w at the points +-2^k and scale every fragment into E.
inline std::vector<Fragment> dilation_fragments(const FreqSet& w) {
  require_bounded_away_from_zero(w);
  std::vector<Fragment> frags;
  for (const Interval& iv : w.body.intervals()) {
    Rational cursor = iv.lo;
    while (cursor < iv.hi) {
      int n;
      Rational band_end;
      if (cursor > 0) {
        n = floor_log2(cursor);
        band_end = pow2(n + 1);
      } else {
        // Negative bands are [-2^{n+1}, -2^n).
        n = floor_log2(-cursor);
        if (pow2(n) == -cursor) --n;
        band_end = -pow2(n);
      }
      Rational end = std::min(band_end, iv.hi);
      int e = -n;
      frags.push_back({Interval(pow2(e) * cursor, pow2(e) * end),
                       Interval(cursor, end), e, 0});
      cursor = end;
    }
  }
  return frags;
}

struct CoverReport {
  IntervalSet gaps;      // target points covered 0 times
  IntervalSet overlaps;  // points covered >= 2 times
  Rational excess = 0;   // sum of (multiplicity - 1) * length over overlaps
};

inline CoverReport cover_report(const std::vector<Fragment>& frags,
                                const IntervalSet& target) {
  std::vector<Rational> cuts;
  for (const Fragment& f : frags) {
    cuts.push_back(f.reduced.lo);
    cuts.push_back(f.reduced.hi);
  }
  for (const Interval& iv : target.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  CoverReport rep;
  std::vector<Interval> gap_ivs, over_ivs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    long mult = 0;
    for (const Fragment& f : frags)
      if (f.reduced.contains(mid)) ++mult;
    bool in_target = target.contains(mid);
    if (in_target && mult == 0) gap_ivs.emplace_back(cuts[i], cuts[i + 1]);
    if (mult >= 2) {
      over_ivs.emplace_back(cuts[i], cuts[i + 1]);
      rep.excess += Rational(mult - 1) * (cuts[i + 1] - cuts[i]);
    }
  }
  rep.gaps = IntervalSet(std::move(gap_ivs));
  rep.overlaps = IntervalSet(std::move(over_ivs));
  return rep;
}

inline const IntervalSet& unit_translation_target() {
  static const IntervalSet t = IntervalSet::of(rat(0), rat(2));
  return t;
}

}  // namespace detail

struct TilingCertificate {
  bool ok = false;
  // First offending region (gap or overlap), in reduced coordinates:
  // [0,2) for the translation check, E for the dilation check.
  std::optional<FreqSet> translation_witness;
  std::optional<FreqSet> dilation_witness;
};

namespace detail {
inline std::optional<FreqSet> first_witness(const CoverReport& rep) {
  if (!rep.overlaps.empty())
    return FreqSet(IntervalSet({rep.overlaps.intervals().front()}));
  if (!rep.gaps.empty())
    return FreqSet(IntervalSet({rep.gaps.intervals().front()}));
  return std::nullopt;
}
}  // namespace detail

// Exact tiling check: {w + 2k} must partition the line (checked as an exact
// single cover of [0,2) by the shifted fragments) and {2^k w} must partition
// the punctured line (single cover of E by the scaled fragments).
inline TilingCertificate verify_wavelet_set(const FreqSet& w) {
  detail::require_bounded_away_from_zero(w);
  TilingCertificate cert;
  auto trep = detail::cover_report(detail::translation_fragments(w),
                                   detail::unit_translation_target());
  auto drep = detail::cover_report(detail::dilation_fragments(w),
                                   littlewood_paley().body);
  cert.translation_witness = detail::first_witness(trep);
  cert.dilation_witness = detail::first_witness(drep);
  cert.ok = !cert.translation_witness && !cert.dilation_witness;
  return cert;
}

// Exact measure by which w misses being a tiling: the larger, over the two
// checks, of uncovered target plus multiply-covered excess.
inline Rational tiling_defect(const FreqSet& w) {
  auto trep = detail::cover_report(detail::translation_fragments(w),
                                   detail::unit_translation_target());
  auto drep = detail::cover_report(detail::dilation_fragments(w),
                                   littlewood_paley().body);
  Rational t = trep.gaps.measure() + trep.excess;
  Rational d = drep.gaps.measure() + drep.excess;
  return std::max(t, d);
}

// (delta restricted to w)^{-1} applied to a subset of E: each fragment of s
// is pulled back through the unique dyadic scale landing it inside w.
// Requires the dilates of w to cover s exactly once, which holds whenever w
// is a verified wavelet set.
inline FreqSet delta_inverse_into(const FreqSet& w, const FreqSet& s) {
  std::vector<Interval> out;
  IntervalSet remaining = s.body;
  for (const detail::Fragment& f : detail::dilation_fragments(w)) {
    IntervalSet hit = set_intersection(remaining, IntervalSet({f.reduced}));
    for (const Interval& iv : hit.intervals())
      out.emplace_back(pow2(-f.scale_e) * iv.lo, pow2(-f.scale_e) * iv.hi);
    remaining = set_difference(remaining, hit);
  }
  if (!remaining.empty())
    throw std::domain_error("delta_inverse_into: set not covered by dilates of w");
  return FreqSet(IntervalSet(std::move(out)));
}

// The wavelet-set metric: sqrt of the true Lebesgue measure of the symmetric
// difference plus sqrt of the 1/|x| integral over it. Endpoints are stored
// in pi-units, so the measure picks up a factor pi while the logarithmic
// integral is scale invariant.
inline double metric_d(const FreqSet& w1, const FreqSet& w2) {
  IntervalSet sd = symmetric_difference(w1.body, w2.body);
  double mu = std::numbers::pi * to_double(sd.measure());
  return std::sqrt(mu) + std::sqrt(log_integral(sd));
}

}  // namespace waveset
