#pragma once

// Built-in exact fixtures: the classical wavelet sets, their induced
// isomorphisms, and the standard contraction pairs used throughout the test
// suite and the command line. Endpoints are transcribed digit for digit; a
// discrepancy against the conversion routines is a regression, not a fixup.

#include "waveset/piecewise_map.hpp"

#include <string>
#include <variant>
#include <vector>

namespace waveset {

enum class GalleryKind { kWaveletSet, kUnitMap };

struct GalleryEntry {
  std::string name;
  GalleryKind kind;
  std::variant<FreqSet, PiecewiseMap> value;
  std::string provenance;

  const FreqSet& set() const { return std::get<FreqSet>(value); }
  const PiecewiseMap& map() const { return std::get<PiecewiseMap>(value); }
};

namespace detail {

inline std::vector<GalleryEntry> build_gallery() {
  auto iv = [](long long nl, long long dl, long long nh, long long dh) {
    return Interval(rat(nl, dl), rat(nh, dh));
  };
  auto piece = [](long long nl, long long dl, long long nh, long long dh,
                  int e, long long nm, long long dm) {
    return AffinePiece(Interval(rat(nl, dl), rat(nh, dh)), e, rat(nm, dm));
  };

  std::vector<GalleryEntry> g;

  g.push_back({"littlewood_paley", GalleryKind::kWaveletSet,
               FreqSet(IntervalSet({iv(-2, 1, -1, 1), iv(1, 1, 2, 1)})),
               "two-interval tiling set; the canonical wavelet set"});

  g.push_back({"S8", GalleryKind::kWaveletSet,
               FreqSet(IntervalSet({iv(-4, 3, -5, 4), iv(-1, 1, -2, 3),
                                    iv(-5, 8, -1, 2), iv(4, 7, 2, 3),
                                    iv(3, 4, 1, 1), iv(4, 3, 11, 8),
                                    iv(4, 1, 32, 7), iv(11, 2, 6, 1)})),
               "eight-interval wavelet set example"});

  g.push_back({"journe", GalleryKind::kWaveletSet,
               FreqSet(IntervalSet({iv(-32, 7, -4, 1), iv(-1, 1, -4, 7),
                                    iv(4, 7, 1, 1), iv(4, 1, 32, 7)})),
               "Journe wavelet set, four intervals"});

  g.push_back({"w_six", GalleryKind::kWaveletSet,
               FreqSet(IntervalSet({iv(-4, 1, -24, 7), iv(-4, 3, -1, 1),
                                    iv(-6, 7, -2, 3), iv(4, 7, 2, 3),
                                    iv(1, 1, 8, 7), iv(4, 3, 2, 1)})),
               "six-interval wavelet set reached from the halving pair by "
               "switching v to the identity above 2/7"});

  g.push_back({"identity", GalleryKind::kUnitMap, PiecewiseMap::identity(),
               "identity map of [0,1); induced by the Littlewood-Paley set"});

  g.push_back({"h_S8", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 3, -1, 1, 2),
                             piece(1, 3, 3, 8, 0, 0, 1),
                             piece(3, 8, 1, 2, -1, 1, 2),
                             piece(1, 2, 4, 7, 2, -2, 1),
                             piece(4, 7, 2, 3, -1, 0, 1),
                             piece(2, 3, 11, 16, 0, 0, 1),
                             piece(11, 16, 3, 4, 2, -2, 1),
                             piece(3, 4, 1, 1, -1, 0, 1)}),
               "induced isomorphism of the eight-interval set"});

  g.push_back({"h_journe", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 3, 7, -1, 1, 2),
                             piece(3, 7, 1, 2, 2, -1, 1),
                             piece(1, 2, 4, 7, 2, -2, 1),
                             piece(4, 7, 1, 1, -1, 0, 1)}),
               "induced isomorphism of the Journe set"});

  g.push_back({"h_six", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 7, 1, 0, 1),
                             piece(1, 7, 1, 3, -1, 1, 2),
                             piece(1, 3, 4, 7, 0, 0, 1),
                             piece(4, 7, 2, 3, -1, 0, 1),
                             piece(2, 3, 1, 1, 0, 0, 1)}),
               "induced isomorphism of the six-interval set"});

  g.push_back({"u_basic", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 2, -1, 1, 2),
                             piece(1, 2, 1, 1, -1, 0, 1)}),
               "two-branch halving contraction; the default WI1 extension"});

  g.push_back({"v_basic", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 2, -2, 1, 2),
                             piece(1, 2, 1, 1, -2, 1, 4)}),
               "quartering pair recovering the Journe isomorphism together "
               "with u_basic"});

  g.push_back({"halving", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 1, -1, 0, 1)}),
               "v(x) = x/2; combined with u_basic it produces a wavelet set "
               "with infinitely many intervals"});

  g.push_back({"v_mixed", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 1, 4, -2, 3, 4),
                             piece(1, 4, 1, 2, -1, 1, 2),
                             piece(1, 2, 5, 8, 0, 0, 1),
                             piece(5, 8, 3, 4, -1, 1, 2),
                             piece(3, 4, 7, 8, -1, 0, 1),
                             piece(7, 8, 1, 1, 0, 0, 1)}),
               "sample WI2 map mixing quartering, halving and identity "
               "regions"});

  g.push_back({"v_six", GalleryKind::kUnitMap,
               PiecewiseMap({piece(0, 1, 2, 7, -1, 0, 1),
                             piece(2, 7, 1, 1, 0, 0, 1)}),
               "halving below 2/7 and identity above; combined with u_basic "
               "it produces the six-interval set"});

  return g;
}

}  // namespace detail

inline const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> g = detail::build_gallery();
  return g;
}

inline std::string gallery_names() {
  std::string names;
  for (const GalleryEntry& e : gallery()) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  return names;
}

inline const GalleryEntry& gallery_get(const std::string& name) {
  for (const GalleryEntry& e : gallery())
    if (e.name == name) return e;
  throw std::domain_error("unknown gallery name '" + name +
                          "'; available: " + gallery_names());
}

}  // namespace waveset
