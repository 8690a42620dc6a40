#pragma once

// JSON wire formats. Rationals travel as strings ("p/q", or "p" when the
// denominator is one) so no endpoint is ever rounded through a float.

#include "waveset/piecewise_map.hpp"
#include "waveset/scb.hpp"

#include <json.hpp>

namespace waveset {

inline void to_json(nlohmann::json& j, const Rational& r) {
  j = to_string(r);
}

inline void from_json(const nlohmann::json& j, Rational& r) {
  r = parse_rational(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const Interval& iv) {
  j = nlohmann::json::array({to_string(iv.lo), to_string(iv.hi)});
}

inline void to_json(nlohmann::json& j, const IntervalSet& s) {
  j = nlohmann::json::array();
  for (const Interval& iv : s.intervals()) j.push_back(iv);
}

inline void from_json(const nlohmann::json& j, IntervalSet& s) {
  std::vector<Interval> ivs;
  for (const auto& pair : j)
    ivs.emplace_back(parse_rational(pair.at(0).get<std::string>()),
                     parse_rational(pair.at(1).get<std::string>()));
  s = IntervalSet(std::move(ivs));
}

inline void to_json(nlohmann::json& j, const FreqSet& w) {
  j = nlohmann::json{{"pi_units", w.body}};
}

inline void from_json(const nlohmann::json& j, FreqSet& w) {
  w = FreqSet(j.at("pi_units").get<IntervalSet>());
}

inline void to_json(nlohmann::json& j, const TilingCertificate& c) {
  j = nlohmann::json{{"ok", c.ok},
                     {"translation_witness", nullptr},
                     {"dilation_witness", nullptr}};
  if (c.translation_witness) j["translation_witness"] = *c.translation_witness;
  if (c.dilation_witness) j["dilation_witness"] = *c.dilation_witness;
}

inline void to_json(nlohmann::json& j, const AffinePiece& p) {
  j = nlohmann::json{{"dom", nlohmann::json::array({to_string(p.dom.lo),
                                                    to_string(p.dom.hi)})},
                     {"e", p.e},
                     {"m", to_string(p.m)}};
}

inline void to_json(nlohmann::json& j, const PiecewiseMap& f) {
  j = nlohmann::json::array();
  for (const AffinePiece& p : f.pieces()) j.push_back(p);
}

inline void from_json(const nlohmann::json& j, PiecewiseMap& f) {
  std::vector<AffinePiece> pieces;
  for (const auto& pj : j)
    pieces.emplace_back(
        Interval(parse_rational(pj.at("dom").at(0).get<std::string>()),
                 parse_rational(pj.at("dom").at(1).get<std::string>())),
        pj.at("e").get<int>(), parse_rational(pj.at("m").get<std::string>()));
  f = PiecewiseMap(std::move(pieces));
}

inline void to_json(nlohmann::json& j, const PartialMap& pm) {
  j = nlohmann::json{{"pieces", pm.map},
                     {"undefined", pm.undefined},
                     {"tol", to_string(pm.tol)}};
}

inline PartialMap partial_map_from_json(const nlohmann::json& j) {
  return PartialMap(j.at("pieces").get<PiecewiseMap>(),
                    j.at("undefined").get<IntervalSet>(),
                    parse_rational(j.at("tol").get<std::string>()));
}

inline void to_json(nlohmann::json& j, const ScbTrace& t) {
  j = nlohmann::json{{"seed_S", t.seed_s},
                     {"seed_N", t.seed_n},
                     {"depth", t.orbit_depth},
                     {"residual", t.residual}};
}

}  // namespace waveset
