#pragma once

// The Schroeder-Cantor-Bernstein combinator for injections of [0,1) and its
// inverse problem, factoring an isomorphism into a contraction pair.
//
// combine(u, v) resolves the orbit decomposition explicitly: the points
// outside the range of v seed the u-branch, the points of range(v) missed by
// v.u seed the v^{-1}-branch, and both seeds are pushed forward through v.u
// until the unresolved core is smaller than the requested tolerance. The
// core shrinks by at least half per level because u halves measure, so the
// truncation is geometric and the returned PartialMap records it exactly.

#include "waveset/piecewise_map.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace waveset {

// Raised when a greedy extension hits its stage budget before reaching the
// requested tolerance; carries the residual measure actually achieved.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, Rational achieved)
      : std::runtime_error(what), achieved_residual(std::move(achieved)) {}
  Rational achieved_residual;
};

class cancelled_error : public std::runtime_error {
 public:
  cancelled_error() : std::runtime_error("operation cancelled by hook") {}
};

// Return false to cancel a long-running orbit iteration or greedy extension.
using ProgressHook = std::function<bool(int stage, const Rational& remaining)>;

struct ScbTrace {
  IntervalSet seed_s;   // [0,1) minus range(v): the u-branch seed
  IntervalSet seed_n;   // range(v) minus range(v.u): the v^{-1}-branch seed
  int orbit_depth = 0;  // last orbit level assigned
  IntervalSet residual;
};

struct CombineResult {
  PartialMap map;
  ScbTrace trace;
};

inline constexpr int kDefaultCombineDepthCap = 4096;

namespace detail {

inline void check_progress(const ProgressHook& hook, int stage,
                           const Rational& remaining) {
  if (hook && !hook(stage, remaining)) throw cancelled_error();
}

inline bool identity_shaped(const PiecewiseMap& v) {
  for (const AffinePiece& p : v.pieces())
    if (p.e != 0 || p.m != 0) return false;
  return v.domain() == unit_interval();
}

// Core orbit iteration. Accepts any injective WI2-shaped v, total or not;
// the public entry point layers the strict classification on top.
inline CombineResult combine_core(const PiecewiseMap& u, const PiecewiseMap& v,
                                  const Rational& tol, int depth_cap,
                                  const ProgressHook& hook) {
  if (tol <= 0) throw std::invalid_argument("combine: tolerance must be positive");
  if (!classify(u).in_wi1)
    throw std::domain_error("combine: u is not a WI1 map");
  if (!v.is_injective())
    throw std::domain_error("combine: v is not injective");
  for (const AffinePiece& p : v.pieces())
    if (!detail::wi2_shaped(p))
      throw std::domain_error("combine: v is not WI2 shaped");

  // v = id makes the combinator the identity outright: nothing lies outside
  // range(v), so every orbit takes the v^{-1} branch, which is the identity.
  if (identity_shaped(v)) {
    ScbTrace trace;
    trace.seed_s = IntervalSet();
    trace.seed_n = set_difference(unit_interval(), u.range());
    trace.orbit_depth = 0;
    trace.residual = IntervalSet();
    return {PartialMap(PiecewiseMap::identity(), IntervalSet(), tol),
            std::move(trace)};
  }

  PiecewiseMap v_inv = invert(v);
  PiecewiseMap forward = compose(u, v);  // v . u

  IntervalSet s_cur = set_difference(unit_interval(), v.range());
  IntervalSet core = forward.range();  // (v.u)([0,1))
  IntervalSet n_cur = set_difference(v.range(), core);

  ScbTrace trace;
  trace.seed_s = s_cur;
  trace.seed_n = n_cur;

  std::vector<AffinePiece> resolved;
  int depth = 0;
  for (;; ++depth) {
    PiecewiseMap s_part = restrict(u, s_cur);
    PiecewiseMap n_part = restrict(v_inv, n_cur);
    for (const AffinePiece& p : s_part.pieces()) resolved.push_back(p);
    for (const AffinePiece& p : n_part.pieces()) resolved.push_back(p);
    Rational remaining = core.measure();
    check_progress(hook, depth, remaining);
    // Stop half a tolerance early: fragments of the core can double in
    // measure through the xi-preimage, and this keeps the synthesized
    // tiling defect of a truncated map within 2 tol outright.
    if (2 * remaining <= tol || depth >= depth_cap) break;
    s_cur = image(forward, s_cur);
    n_cur = image(forward, n_cur);
    core = image(forward, core);
  }

  trace.orbit_depth = depth;
  trace.residual = core;
  Rational bound = std::max(tol, core.measure());
  return {PartialMap(PiecewiseMap(std::move(resolved)), core, bound),
          std::move(trace)};
}

}  // namespace detail

// u <> v restricted to the orbit levels resolved before the unresolved core
// drops below tol (or depth_cap levels, whichever comes first).
inline CombineResult combine(const PiecewiseMap& u, const PiecewiseMap& v,
                             const Rational& tol,
                             int depth_cap = kDefaultCombineDepthCap,
                             const ProgressHook& hook = {}) {
  if (!classify(v).in_wi2)
    throw std::domain_error("combine: v is not a WI2 map");
  return detail::combine_core(u, v, tol, depth_cap, hook);
}

// Greedy completion of an injective WI1-shaped partial map to a total WI1
// map: stages k = 1, 2, ... try the right-half contraction x/2^k and then
// the left-half contraction (x-1)/2^k + 1, each time claiming every still
// uncovered point whose image avoids the range used so far.
inline PiecewiseMap extend_to_wi1(const PiecewiseMap& partial,
                                  int stage_budget = 64) {
  if (!partial.is_injective())
    throw std::domain_error("extend_to_wi1: partial map is not injective");
  for (const AffinePiece& p : detail::halved_pieces(partial))
    if (!detail::wi1_shaped(p))
      throw std::domain_error("extend_to_wi1: piece outside the WI1 family");

  const Rational half = rat(1, 2);
  IntervalSet unc_r =
      set_difference(IntervalSet::of(half, rat(1)), partial.domain());
  IntervalSet unc_l =
      set_difference(IntervalSet::of(rat(0), half), partial.domain());
  IntervalSet used = partial.range();

  std::vector<AffinePiece> pieces = partial.pieces();
  for (int k = 1; k <= stage_budget; ++k) {
    if (unc_r.empty() && unc_l.empty()) break;
    for (bool right : {true, false}) {
      IntervalSet& unc = right ? unc_r : unc_l;
      if (unc.empty()) continue;
      Rational m = right ? rat(0) : Rational(1 - pow2(-k));
      IntervalSet keep =
          set_difference(affine_image(unc, -k, m), used);
      if (keep.empty()) continue;
      IntervalSet taken = affine_preimage(keep, -k, m);
      for (const Interval& iv : taken.intervals())
        pieces.emplace_back(iv, -k, m);
      used = set_union(used, keep);
      unc = set_difference(unc, taken);
    }
  }
  if (!unc_r.empty() || !unc_l.empty())
    throw budget_error("extend_to_wi1: stage budget exhausted",
                       unc_r.measure() + unc_l.measure());
  return PiecewiseMap(std::move(pieces));
}

// Greedy extension of an injective WI2-shaped partial map, enumerating the
// candidate formulas (x + l)/2^k along Cantor diagonals of (l, k). Stops
// when the unextended domain has measure at most tol; the enumeration is
// fixed, so results are reproducible.
inline PartialMap extend_to_wi2(const PiecewiseMap& partial, const Rational& tol,
                                int stage_budget = 2048,
                                const ProgressHook& hook = {}) {
  if (tol <= 0)
    throw std::invalid_argument("extend_to_wi2: tolerance must be positive");
  if (!partial.is_injective())
    throw std::domain_error("extend_to_wi2: partial map is not injective");
  for (const AffinePiece& p : partial.pieces())
    if (!detail::wi2_shaped(p))
      throw std::domain_error("extend_to_wi2: piece outside the WI2 family");

  IntervalSet undef = set_difference(unit_interval(), partial.domain());
  IntervalSet used = partial.range();
  std::vector<AffinePiece> pieces = partial.pieces();

  int stage = 0;
  for (int diag = 0; undef.measure() > tol; ++diag) {
    for (int l = 0; l <= diag; ++l) {
      int k = diag - l;
      if (k > 60) continue;                        // exponent guard
      if (BigInt(l) >= (BigInt(1) << k)) continue; // image window leaves [0,1)
      if (++stage > stage_budget)
        throw budget_error("extend_to_wi2: stage budget exhausted",
                           undef.measure());
      detail::check_progress(hook, stage, undef.measure());
      Rational m = Rational(l) * pow2(-k);
      IntervalSet keep = set_difference(affine_image(undef, -k, m), used);
      if (keep.empty()) continue;
      IntervalSet taken = affine_preimage(keep, -k, m);
      for (const Interval& iv : taken.intervals())
        pieces.emplace_back(iv, -k, m);
      used = set_union(used, keep);
      undef = set_difference(undef, taken);
      if (undef.measure() <= tol) break;
    }
  }
  return PartialMap(PiecewiseMap(std::move(pieces)), undef,
                    std::max(tol, undef.measure()));
}

struct FactorizeResult {
  PiecewiseMap u;   // total WI1 map agreeing with h where h contracts
  PartialMap v;     // WI2 map recovering h^{-1} elsewhere, up to tol
  IntervalSet d1;   // domains of the contracting pieces of h
};

// Factor h = u <> v: u copies the contracting pieces of h (negative dyadic
// exponent) and is completed greedily inside WI1; v copies h^{-1} on the
// range left over and is completed greedily inside WI2.
inline FactorizeResult factorize(const PiecewiseMap& h, const Rational& tol) {
  if (!classify(h).in_wi)
    throw std::domain_error("factorize: map is not a wavelet-induced isomorphism");

  std::vector<Interval> contracting;
  for (const AffinePiece& p : detail::halved_pieces(h))
    if (p.e <= -1) contracting.push_back(p.dom);
  IntervalSet d1(std::move(contracting));

  PiecewiseMap u = extend_to_wi1(restrict(h, d1));
  IntervalSet r2 = set_difference(unit_interval(), image(h, d1));
  PartialMap v = extend_to_wi2(restrict(invert(h), r2), tol);
  return {std::move(u), std::move(v), std::move(d1)};
}

}  // namespace waveset
