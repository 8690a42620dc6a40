#pragma once

// Piecewise dyadic-affine maps of [0,1). A piece sends x to 2^e x + m on a
// half-open subinterval of [0,1); maps are kept in a canonical form (pieces
// sorted by domain, adjacent pieces with identical coefficients merged) so
// that fixture comparisons are componentwise.
//
// The two conversion routines implement the correspondence between wavelet
// sets and unit-interval isomorphisms: induced_isomorphism conjugates the
// translation/dilation reductions through xi, and wavelet_set_from_isomorphism
// rebuilds the frequency set from the dyadic scale of each piece.

#include "waveset/frequency.hpp"
#include "waveset/interval_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace waveset {

inline const IntervalSet& unit_interval() {
  static const IntervalSet u = IntervalSet::of(rat(0), rat(1));
  return u;
}

struct AffinePiece {
  Interval dom;  // subset of [0,1)
  int e = 0;     // x -> 2^e x + m
  Rational m;

  AffinePiece(Interval d, int e_, Rational m_)
      : dom(std::move(d)), e(e_), m(std::move(m_)) {
    if (dom.lo < 0 || dom.hi > 1)
      throw std::domain_error("piece domain not contained in [0,1)");
    Interval img = image();
    if (img.lo < 0 || img.hi > 1)
      throw std::domain_error("piece image not contained in [0,1)");
  }

  Rational apply(const Rational& x) const { return pow2(e) * x + m; }
  Interval image() const { return Interval(apply(dom.lo), apply(dom.hi)); }

  friend bool operator==(const AffinePiece& a, const AffinePiece& b) = default;
};

class PiecewiseMap {
 public:
  PiecewiseMap() = default;

  explicit PiecewiseMap(std::vector<AffinePiece> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& a, const AffinePiece& b) {
                return a.dom.lo < b.dom.lo;
              });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
      if (pieces[i].dom.hi > pieces[i + 1].dom.lo)
        throw std::domain_error("piece domains overlap");
    // Canonical form: adjacent pieces with the same coefficients merge.
    for (AffinePiece& p : pieces) {
      if (!pieces_.empty() && pieces_.back().dom.hi == p.dom.lo &&
          pieces_.back().e == p.e && pieces_.back().m == p.m)
        pieces_.back().dom.hi = p.dom.hi;
      else
        pieces_.push_back(std::move(p));
    }
  }

  static PiecewiseMap identity() {
    return PiecewiseMap({AffinePiece(Interval(rat(0), rat(1)), 0, rat(0))});
  }

  bool empty() const { return pieces_.empty(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  bool is_identity() const {
    return pieces_.size() == 1 && pieces_[0].e == 0 && pieces_[0].m == 0 &&
           pieces_[0].dom == Interval(rat(0), rat(1));
  }

  IntervalSet domain() const {
    std::vector<Interval> ivs;
    ivs.reserve(pieces_.size());
    for (const AffinePiece& p : pieces_) ivs.push_back(p.dom);
    return IntervalSet(std::move(ivs));
  }

  IntervalSet range() const {
    std::vector<Interval> ivs;
    ivs.reserve(pieces_.size());
    for (const AffinePiece& p : pieces_) ivs.push_back(p.image());
    return IntervalSet(std::move(ivs));
  }

  // Images of distinct pieces never collide exactly when the map is 1-1.
  bool is_injective() const {
    std::vector<Interval> imgs;
    imgs.reserve(pieces_.size());
    for (const AffinePiece& p : pieces_) imgs.push_back(p.image());
    std::sort(imgs.begin(), imgs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < imgs.size(); ++i)
      if (imgs[i].hi > imgs[i + 1].lo) return false;
    return true;
  }

  Rational eval(const Rational& x) const {
    for (const AffinePiece& p : pieces_)
      if (p.dom.contains(x)) return p.apply(x);
    throw std::domain_error("map undefined at " + waveset::to_string(x));
  }

  friend bool operator==(const PiecewiseMap& a, const PiecewiseMap& b) = default;

 private:
  std::vector<AffinePiece> pieces_;
};

inline IntervalSet image(const PiecewiseMap& f, const IntervalSet& s) {
  std::vector<Interval> out;
  for (const AffinePiece& p : f.pieces()) {
    IntervalSet hit = set_intersection(s, IntervalSet({p.dom}));
    for (const Interval& iv : hit.intervals())
      out.emplace_back(p.apply(iv.lo), p.apply(iv.hi));
  }
  return IntervalSet(std::move(out));
}

inline IntervalSet preimage(const PiecewiseMap& f, const IntervalSet& s) {
  std::vector<Interval> out;
  for (const AffinePiece& p : f.pieces()) {
    IntervalSet pulled = affine_preimage(s, p.e, p.m);
    IntervalSet hit = set_intersection(pulled, IntervalSet({p.dom}));
    for (const Interval& iv : hit.intervals()) out.push_back(iv);
  }
  return IntervalSet(std::move(out));
}

// Restriction of f to s (pieces split at the boundary of s).
inline PiecewiseMap restrict(const PiecewiseMap& f, const IntervalSet& s) {
  std::vector<AffinePiece> out;
  for (const AffinePiece& p : f.pieces()) {
    IntervalSet hit = set_intersection(s, IntervalSet({p.dom}));
    for (const Interval& iv : hit.intervals())
      out.emplace_back(iv, p.e, p.m);
  }
  return PiecewiseMap(std::move(out));
}

// Composition in application order: (compose(f, g))(x) = g(f(x)).
// Defined wherever f lands inside the domain of g.
inline PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g) {
  std::vector<AffinePiece> out;
  for (const AffinePiece& pf : f.pieces()) {
    Interval img = pf.image();
    for (const AffinePiece& pg : g.pieces()) {
      IntervalSet common =
          set_intersection(IntervalSet({img}), IntervalSet({pg.dom}));
      for (const Interval& iv : common.intervals()) {
        Rational lo = pow2(-pf.e) * (iv.lo - pf.m);
        Rational hi = pow2(-pf.e) * (iv.hi - pf.m);
        out.emplace_back(Interval(lo, hi), pf.e + pg.e,
                         pow2(pg.e) * pf.m + pg.m);
      }
    }
  }
  return PiecewiseMap(std::move(out));
}

inline PiecewiseMap invert(const PiecewiseMap& f) {
  if (!f.is_injective())
    throw std::domain_error("cannot invert a non-injective map");
  std::vector<AffinePiece> out;
  out.reserve(f.pieces().size());
  for (const AffinePiece& p : f.pieces())
    out.emplace_back(p.image(), -p.e, -pow2(-p.e) * p.m);
  return PiecewiseMap(std::move(out));
}

namespace detail {

// Pieces split at 1/2, so each lies in one half of [0,1).
inline std::vector<AffinePiece> halved_pieces(const PiecewiseMap& f) {
  static const Rational half = rat(1, 2);
  std::vector<AffinePiece> out;
  for (const AffinePiece& p : f.pieces()) {
    if (p.dom.lo < half && p.dom.hi > half) {
      out.emplace_back(Interval(p.dom.lo, half), p.e, p.m);
      out.emplace_back(Interval(half, p.dom.hi), p.e, p.m);
    } else {
      out.push_back(p);
    }
  }
  return out;
}

// The two congruences behind the fractional-part form: a piece on the right
// half is x -> frac(2^e x) iff m is an integer, and a piece on the left half
// is x -> frac(2^e (x-1)) iff m + 2^e is an integer.
inline bool satisfies_wi_congruence(const AffinePiece& p) {
  if (p.dom.lo >= rat(1, 2)) return is_integer(p.m);
  return is_integer(p.m + pow2(p.e));
}

// Contraction-family shape: x/2^k on the right half, (x-1)/2^k + 1 on the
// left half, k >= 1. Assumes the piece does not straddle 1/2.
inline bool wi1_shaped(const AffinePiece& p) {
  if (p.e > -1) return false;
  bool right = p.dom.lo >= rat(1, 2);
  return p.m == (right ? rat(0) : Rational(1 - pow2(p.e)));
}

// (x + l)/2^k shape with k, l >= 0.
inline bool wi2_shaped(const AffinePiece& p) {
  return p.e <= 0 && p.m >= 0 && is_integer(p.m * pow2(-p.e));
}

}  // namespace detail

struct Classification {
  bool in_wi = false;
  bool in_wi1 = false;
  bool in_wi2 = false;
};

// Class membership tests. Exponent conventions: a piece stores the literal
// affine exponent e in x -> 2^e x + m. The fractional-part normal form
// frac(2^k x) has k = e, while the contraction families x/2^k and
// (x + l)/2^k have k = -e.
inline Classification classify(const PiecewiseMap& f) {
  Classification c;
  if (f.empty()) return c;
  bool total = f.domain() == unit_interval();
  bool injective = f.is_injective();
  if (!total) return c;

  auto halves = detail::halved_pieces(f);

  bool congruent = true, wi1_shape = true, wi2_shape = true;
  for (const AffinePiece& p : halves) {
    if (!detail::satisfies_wi_congruence(p)) congruent = false;
    if (!detail::wi1_shaped(p)) wi1_shape = false;
    if (!detail::wi2_shaped(p)) wi2_shape = false;
  }

  c.in_wi = congruent && injective && f.range() == unit_interval();
  c.in_wi1 = wi1_shape && injective;
  c.in_wi2 = wi2_shape && injective;
  return c;
}

// Largest set where the two maps evaluate identically. Pieces agree on a
// subinterval iff they carry the same coefficients; distinct affine graphs
// cross in at most a point, which is null and dropped.
inline IntervalSet agreement_set(const PiecewiseMap& f, const PiecewiseMap& g) {
  std::vector<Interval> out;
  for (const AffinePiece& pf : f.pieces())
    for (const AffinePiece& pg : g.pieces()) {
      if (pf.e != pg.e || pf.m != pg.m) continue;
      IntervalSet common =
          set_intersection(IntervalSet({pf.dom}), IntervalSet({pg.dom}));
      for (const Interval& iv : common.intervals()) out.push_back(iv);
    }
  return IntervalSet(std::move(out));
}

// Complement of the agreement set inside the common domain.
inline IntervalSet disagreement_set(const PiecewiseMap& f, const PiecewiseMap& g) {
  IntervalSet common = set_intersection(f.domain(), g.domain());
  return set_difference(common, agreement_set(f, g));
}

// Conjugated reduction map of a verified wavelet set: split w so that the
// dilation reduction is a single scale and the translation reduction a
// single shift on each fragment, then carry each fragment through
// xi . tau . delta^{-1} . xi^{-1}.
inline PiecewiseMap induced_isomorphism(const FreqSet& w) {
  TilingCertificate cert = verify_wavelet_set(w);
  if (!cert.ok)
    throw std::domain_error("induced_isomorphism: input is not a wavelet set");

  std::vector<AffinePiece> out;
  for (const detail::Fragment& df : detail::dilation_fragments(w)) {
    // Refine each dyadic fragment at integers so the shift is constant.
    Rational cursor = df.source.lo;
    while (cursor < df.source.hi) {
      BigInt ell = floor_int(cursor);
      Rational end = std::min(Rational(ell + 1), df.source.hi);
      int n = -df.scale_e;  // fragment sits in +-[2^n, 2^{n+1})
      bool negative = cursor < 0;
      bool ell_odd = (ell % 2) != 0;
      // tau shifts by 1-ell into [1,2) when ell is odd, by -(ell+2) into
      // [-2,-1) when even; xi then contributes the +1 on the negative half.
      Rational base = ell_odd ? Rational((1 - ell) / 2) : Rational(-ell / 2);
      Rational m = negative ? Rational(base - pow2(n)) : base;
      Rational scale = pow2(-n - 1);
      Interval dom = negative
                         ? Interval(scale * cursor + 1, scale * end + 1)
                         : Interval(scale * cursor, scale * end);
      out.emplace_back(dom, n, m);
      cursor = end;
    }
  }
  return PiecewiseMap(std::move(out));
}

namespace detail {

// Frequency fragment generated by one (half-split) piece: scale the
// xi-preimage of the domain by the piece's dyadic exponent.
inline Interval piece_fragment(const AffinePiece& p) {
  Rational f = pow2(p.e + 1);
  if (p.dom.lo >= rat(1, 2)) return Interval(f * p.dom.lo, f * p.dom.hi);
  return Interval(f * p.dom.lo - f, f * p.dom.hi - f);
}

inline FreqSet synthesize_pieces(const std::vector<AffinePiece>& halves) {
  std::vector<Interval> out;
  out.reserve(halves.size());
  for (const AffinePiece& p : halves) {
    if (!satisfies_wi_congruence(p))
      throw std::domain_error(
          "synthesis requires fractional-part pieces "
          "(offset congruence violated)");
    out.push_back(piece_fragment(p));
  }
  return FreqSet(IntervalSet(std::move(out)));
}

}  // namespace detail

// Inverse direction of the correspondence: from a full isomorphism back to
// its wavelet set. Round-trips exactly against induced_isomorphism.
inline FreqSet wavelet_set_from_isomorphism(const PiecewiseMap& h) {
  if (!classify(h).in_wi)
    throw std::domain_error(
        "wavelet_set_from_isomorphism: map is not a wavelet-induced "
        "isomorphism");
  return detail::synthesize_pieces(detail::halved_pieces(h));
}

// Prefix synthesis for truncated maps: emits the fragments of whatever
// pieces are present without demanding a full bijection. The result is a
// subset of the wavelet set of any extension of the map.
inline FreqSet synthesize_prefix(const PiecewiseMap& partial) {
  return detail::synthesize_pieces(detail::halved_pieces(partial));
}

// A map together with the explicitly tracked region where a truncated
// construction never assigned a value.
struct PartialMap {
  PiecewiseMap map;
  IntervalSet undefined;
  Rational tol;

  PartialMap(PiecewiseMap m, IntervalSet undef, Rational tolerance)
      : map(std::move(m)), undefined(std::move(undef)), tol(std::move(tolerance)) {
    if (set_union(map.domain(), undefined) != unit_interval() ||
        !set_intersection(map.domain(), undefined).empty())
      throw std::domain_error(
          "partial map: defined and undefined regions must partition [0,1)");
    if (undefined.measure() > tol)
      throw std::domain_error("partial map: residual exceeds tolerance");
  }
};

}  // namespace waveset
