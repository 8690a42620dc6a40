#pragma once

// Command-line surface. Set and map arguments accept either a gallery
// reference ("gallery:journe", "map:halving") or a path to a JSON file in
// the library's wire format. Exit codes: 0 success (and verified-true),
// 1 verified-false, 2 usage or domain error.

#include "waveset/gallery.hpp"
#include "waveset/homotopy.hpp"
#include "waveset/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace waveset {
namespace cli {

inline Rational parse_tolerance(const std::string& text) {
  if (text.rfind("2^", 0) == 0) return pow2(std::stoi(text.substr(2)));
  Rational tol = parse_rational(text);
  if (tol <= 0) throw std::domain_error("tolerance must be positive");
  return tol;
}

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

inline bool has_prefix(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

inline FreqSet resolve_set(const std::string& arg) {
  for (const std::string prefix : {"gallery:", "set:"}) {
    if (has_prefix(arg, prefix)) {
      const GalleryEntry& e = gallery_get(arg.substr(prefix.size()));
      if (e.kind != GalleryKind::kWaveletSet)
        throw std::domain_error("'" + e.name + "' is not a wavelet set");
      return e.set();
    }
  }
  return load_json(arg).get<FreqSet>();
}

struct MapArg {
  PiecewiseMap map;
  std::optional<IntervalSet> undefined;  // present for partial-map files
};

inline MapArg resolve_map(const std::string& arg) {
  for (const std::string prefix : {"gallery:", "map:"}) {
    if (has_prefix(arg, prefix)) {
      const GalleryEntry& e = gallery_get(arg.substr(prefix.size()));
      if (e.kind != GalleryKind::kUnitMap)
        throw std::domain_error("'" + e.name + "' is not a unit map");
      return {e.map(), std::nullopt};
    }
  }
  nlohmann::json j = load_json(arg);
  if (j.is_object() && j.contains("pieces")) {
    PartialMap pm = partial_map_from_json(j);
    return {pm.map, pm.undefined};
  }
  return {j.get<PiecewiseMap>(), std::nullopt};
}

inline std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> ts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ts.push_back(parse_rational(item));
  }
  if (ts.empty()) throw std::domain_error("empty parameter grid");
  return ts;
}

inline void print_json(std::ostream& out, const nlohmann::json& j) {
  out << j.dump(2) << "\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact wavelet-set laboratory"};
  app.require_subcommand(1);

  std::string tol_text = "2^-40";
  int depth = 32;
  std::string format = "json";
  app.add_option("--tol", tol_text, "truncation tolerance (p/q or 2^-N)")
      ->capture_default_str();
  app.add_option("--depth", depth, "orbit depth cap / chain stage cap")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string set_a, set_b, map_a, map_b, gallery_action = "list",
                                          gallery_name, grid_text;

  auto add_sub = [&app](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();  // let --tol / --depth / --format trail the arguments
    return sub;
  };

  auto* verify = add_sub("verify", "tiling check for a set");
  verify->add_option("set", set_a)->required();

  auto* induce = add_sub("induce", "induced isomorphism of a set");
  induce->add_option("set", set_a)->required();

  auto* synth = add_sub("synthesize", "wavelet set of a map");
  synth->add_option("map", map_a)->required();

  auto* comb = add_sub("combine", "Schroeder-Cantor-Bernstein u <> v");
  comb->add_option("u", map_a)->required();
  comb->add_option("v", map_b)->required();

  auto* fact = add_sub("factorize", "factor a map as u <> v");
  fact->add_option("map", map_a)->required();

  auto* metric = add_sub("metric", "distance between two sets");
  metric->add_option("set1", set_a)->required();
  metric->add_option("set2", set_b)->required();

  auto* path = add_sub("path", "sample the path from a set to the "
                               "Littlewood-Paley set");
  path->add_option("set", set_a)->required();
  path->add_option("grid", grid_text, "comma-separated parameters in [0,1]")
      ->required();

  auto* gal = add_sub("gallery", "built-in fixtures");
  gal->add_option("action", gallery_action)->check(CLI::IsMember({"list", "get"}));
  gal->add_option("name", gallery_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Rational tol = parse_tolerance(tol_text);

    if (verify->parsed()) {
      TilingCertificate cert = verify_wavelet_set(detail::resolve_set(set_a));
      detail::print_json(out, nlohmann::json(cert));
      return cert.ok ? 0 : 1;
    }

    if (induce->parsed()) {
      detail::print_json(
          out, nlohmann::json(induced_isomorphism(detail::resolve_set(set_a))));
      return 0;
    }

    if (synth->parsed()) {
      detail::MapArg m = detail::resolve_map(map_a);
      FreqSet w = m.undefined ? synthesize_prefix(m.map)
                              : wavelet_set_from_isomorphism(m.map);
      detail::print_json(out, nlohmann::json(w));
      return 0;
    }

    if (comb->parsed()) {
      CombineResult res = combine(detail::resolve_map(map_a).map,
                                  detail::resolve_map(map_b).map, tol, depth);
      detail::print_json(
          out, nlohmann::json{{"map", res.map}, {"trace", res.trace}});
      return 0;
    }

    if (fact->parsed()) {
      FactorizeResult res = factorize(detail::resolve_map(map_a).map, tol);
      detail::print_json(out, nlohmann::json{{"u", res.u},
                                             {"v", res.v},
                                             {"D1", res.d1}});
      return 0;
    }

    if (metric->parsed()) {
      double d = metric_d(detail::resolve_set(set_a), detail::resolve_set(set_b));
      if (format == "csv") {
        out << "d\n" << std::setprecision(12) << d << "\n";
      } else {
        detail::print_json(out, nlohmann::json{{"d", d}});
      }
      return 0;
    }

    if (path->parsed()) {
      FreqSet w = detail::resolve_set(set_a);
      WaveletPath wp(w, tol, depth);
      const FreqSet& lp = littlewood_paley();
      nlohmann::json rows = nlohmann::json::array();
      if (format != "json")
        out << "t,interval_count,tiling_defect,d_to_start,d_to_lp\n";
      for (const Rational& t : detail::parse_grid(grid_text)) {
        FreqSet wt = wp.at(t);
        double defect = to_double(tiling_defect(wt));
        double d0 = metric_d(wt, w), de = metric_d(wt, lp);
        if (format == "json") {
          rows.push_back({{"t", to_string(t)},
                          {"interval_count", wt.body.size()},
                          {"tiling_defect", defect},
                          {"d_to_start", d0},
                          {"d_to_lp", de}});
        } else {
          out << to_string(t) << "," << wt.body.size() << ","
              << std::setprecision(12) << defect << "," << d0 << "," << de
              << "\n";
        }
      }
      if (format == "json") detail::print_json(out, rows);
      return 0;
    }

    if (gal->parsed()) {
      if (gallery_action == "list") {
        for (const GalleryEntry& e : gallery())
          out << e.name << "  ["
              << (e.kind == GalleryKind::kWaveletSet ? "wavelet_set"
                                                     : "unit_map")
              << "]  " << e.provenance << "\n";
        return 0;
      }
      if (gallery_name.empty())
        throw std::domain_error("gallery get requires a name");
      const GalleryEntry& e = gallery_get(gallery_name);
      nlohmann::json j{{"name", e.name},
                       {"kind", e.kind == GalleryKind::kWaveletSet
                                    ? "wavelet_set"
                                    : "unit_map"},
                       {"provenance", e.provenance}};
      if (e.kind == GalleryKind::kWaveletSet)
        j["value"] = e.set();
      else
        j["value"] = e.map();
      detail::print_json(out, j);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cli
}  // namespace waveset
