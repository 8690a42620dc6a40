#include "support.hpp"

#include "waveset/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace waveset;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const nlohmann::json& j)
      : path(std::string("cli_test_") + std::to_string(counter++) + ".json") {
    std::ofstream f(path);
    f << j.dump();
  }
  ~TempFile() { std::remove(path.c_str()); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("every gallery wavelet set verifies exactly") {
  for (const GalleryEntry& e : gallery()) {
    if (e.kind != GalleryKind::kWaveletSet) continue;
    INFO(e.name);
    CHECK(verify_wavelet_set(e.set()).ok);
    CHECK(e.set().measure_pi_units() == 2);
  }
}

TEST_CASE("every gallery map carries its advertised classification") {
  auto cls = [](const char* name) { return classify(gallery_get(name).map()); };
  CHECK(cls("identity").in_wi);
  CHECK(cls("h_S8").in_wi);
  CHECK(cls("h_journe").in_wi);
  CHECK(cls("h_six").in_wi);
  CHECK(cls("u_basic").in_wi1);
  CHECK(cls("v_basic").in_wi2);
  CHECK(cls("halving").in_wi2);
  CHECK(cls("v_mixed").in_wi2);
  CHECK(cls("v_six").in_wi2);
}

TEST_CASE("fixture regressions tie the gallery together") {
  CHECK(induced_isomorphism(gallery_get("S8").set()) == gallery_get("h_S8").map());
  CHECK(induced_isomorphism(gallery_get("journe").set()) ==
        gallery_get("h_journe").map());
  CHECK(induced_isomorphism(gallery_get("w_six").set()) ==
        gallery_get("h_six").map());
  CHECK(wavelet_set_from_isomorphism(gallery_get("h_six").map()) ==
        gallery_get("w_six").set());
}

TEST_CASE("gallery lookup errors list the available names") {
  try {
    gallery_get("nonesuch");
    FAIL("expected a lookup error");
  } catch (const std::domain_error& e) {
    std::string what = e.what();
    CHECK(what.find("journe") != std::string::npos);
    CHECK(what.find("halving") != std::string::npos);
  }
}

TEST_CASE("cli verify") {
  CliRun ok = run_cli({"verify", "gallery:S8"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out).at("ok").get<bool>());

  // Half of the fundamental domain fails with a witness and exit code 1.
  TempFile half(nlohmann::json::parse(R"({"pi_units":[["1","2"]]})"));
  CliRun bad = run_cli({"verify", half.path});
  CHECK(bad.code == 1);
  auto cert = nlohmann::json::parse(bad.out);
  CHECK_FALSE(cert.at("ok").get<bool>());
  CHECK(cert.at("translation_witness").is_object());
}

TEST_CASE("cli metric") {
  CliRun r = run_cli({"metric", "gallery:littlewood_paley", "gallery:journe"});
  REQUIRE(r.code == 0);
  double d = nlohmann::json::parse(r.out).at("d").get<double>();
  CHECK_THAT(d, Catch::Matchers::WithinAbs(5.210017, 1e-6));

  CliRun csv = run_cli({"metric", "gallery:littlewood_paley", "gallery:journe",
                        "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("d\n", 0) == 0);
}

TEST_CASE("cli induce and synthesize round trip through files") {
  CliRun induced = run_cli({"induce", "gallery:journe"});
  REQUIRE(induced.code == 0);
  TempFile map_file(nlohmann::json::parse(induced.out));
  CliRun synth = run_cli({"synthesize", map_file.path});
  REQUIRE(synth.code == 0);
  CHECK(nlohmann::json::parse(synth.out).get<FreqSet>() ==
        gallery_get("journe").set());

  CliRun direct = run_cli({"synthesize", "map:h_journe"});
  REQUIRE(direct.code == 0);
  CHECK(nlohmann::json::parse(direct.out).get<FreqSet>() ==
        gallery_get("journe").set());
}

TEST_CASE("cli combine emits the resolved map and its trace") {
  CliRun r = run_cli({"combine", "gallery:u_basic", "map:halving",
                      "--depth", "10"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto pieces = j.at("map").at("pieces");
  // The first orbit interval [1/8,1/4) carries the shifted halving branch.
  bool found = false;
  for (const auto& p : pieces)
    if (p.at("dom").at(0) == "1/8" && p.at("dom").at(1) == "1/4" &&
        p.at("e").get<int>() == -1 && p.at("m") == "1/2")
      found = true;
  CHECK(found);
  CHECK(j.at("trace").at("depth").get<int>() == 10);
  CHECK(j.at("trace").at("seed_S") == nlohmann::json::parse(R"([["1/2","1"]])"));

  // The partial output synthesizes to a prefix of the infinite-interval set.
  TempFile partial_file(j.at("map"));
  CliRun synth = run_cli({"synthesize", partial_file.path});
  REQUIRE(synth.code == 0);
  FreqSet prefix = nlohmann::json::parse(synth.out).get<FreqSet>();
  CHECK(prefix.body.contains(rat(3, 4)));     // inside [1/2,1)
  CHECK(prefix.body.contains(rat(-5, 2)));    // inside [-8/3,-2)
  CHECK(tiling_defect(prefix) <= pow2(-9));   // depth 10 core, amplified by 4
}

TEST_CASE("cli factorize") {
  CliRun r = run_cli({"factorize", "gallery:h_S8"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("u").get<PiecewiseMap>() == gallery_get("u_basic").map());
  CHECK(j.at("D1") ==
        nlohmann::json::parse(
            R"([["0","1/3"],["3/8","1/2"],["4/7","2/3"],["3/4","1"]])"));
}

TEST_CASE("cli path emits csv rows") {
  CliRun r = run_cli({"path", "gallery:journe", "0,1/2,1", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line, last_row;
  std::getline(lines, line);
  CHECK(line == "t,interval_count,tiling_defect,d_to_start,d_to_lp");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) {
      ++rows;
      last_row = line;
    }
  CHECK(rows == 3);
  // Final row reaches the Littlewood-Paley set exactly.
  CHECK(last_row.rfind("1,2,0,", 0) == 0);
}

TEST_CASE("cli gallery commands") {
  CliRun list = run_cli({"gallery", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("littlewood_paley") != std::string::npos);
  CHECK(list.out.find("w_six") != std::string::npos);

  CliRun get = run_cli({"gallery", "get", "journe"});
  CHECK(get.code == 0);
  auto j = nlohmann::json::parse(get.out);
  CHECK(j.at("kind") == "wavelet_set");
  CHECK(j.at("value").get<FreqSet>() == gallery_get("journe").set());
}

TEST_CASE("cli usage and domain errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "gallery:nonesuch"}).code == 2);
  CHECK(run_cli({"verify", "no_such_file.json"}).code == 2);
  CHECK(run_cli({"metric", "gallery:journe", "gallery:h_S8"}).code == 2);
  CHECK(run_cli({"combine", "gallery:halving", "map:halving"}).code == 2);
  CHECK(run_cli({"path", "gallery:journe", ""}).code == 2);
  CHECK(run_cli({"verify", "gallery:S8", "--tol", "0"}).code == 2);
}

TEST_CASE("cli help is not an error") {
  CliRun help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
