#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "modkit/acceptance.hpp"
#include "modkit/catalog.hpp"
#include "modkit/errors.hpp"
#include "modkit/invariant.hpp"
#include "modkit/io.hpp"
#include "modkit/ising.hpp"

using namespace modkit;

TEST_CASE("Ising at infinite temperature counts configurations") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto r = ising_partition(m, n, 0.0);
      CHECK(r.brute == std::ldexp(1.0, m * n));
      CHECK(r.trace == doctest::Approx(std::ldexp(1.0, m * n)).epsilon(1e-14));
    }
}

TEST_CASE("Ising 2 x 2 at beta = 1") {
  const auto r = ising_partition(2, 2, 1.0);
  CHECK(r.relative_difference() < 1e-12);
}

TEST_CASE("single-column Ising chain matches the 2 x 2 closed form") {
  // width 1: the in-row bond is the self bond (+1), so T = e^b [[e^b, e^-b], [e^-b, e^b]]
  for (double beta : {0.1, 0.5, 1.3})
    for (int n = 1; n <= 12; ++n) {
      const double lp = std::exp(beta) * 2 * std::cosh(beta);
      const double lm = std::exp(beta) * 2 * std::sinh(beta);
      const double closed = std::pow(lp, n) + std::pow(lm, n);
      const auto r = ising_partition(1, n, beta);
      CHECK(r.brute == doctest::Approx(closed).epsilon(1e-12));
      CHECK(r.trace == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("Ising size guard") {
  CHECK_THROWS_AS(ising_partition(5, 5, 0.3), PreconditionError);
  CHECK_THROWS_AS(ising_partition(0, 3, 0.3), PreconditionError);
}

TEST_CASE("fusion system files round-trip") {
  const auto s = gen_su2(5);
  const Json j = to_json(s);
  const auto back = system_from_json(j);
  CHECK(back.fusion.rules().fusion == s.fusion.rules().fusion);
  CHECK(back.fusion.rules().conjugation == s.fusion.rules().conjugation);
  CHECK(back.twists == s.twists);
  CHECK(j.dump() == to_json(back).dump());
}

TEST_CASE("unknown major versions and malformed files are rejected") {
  Json j = to_json(gen_su2(2));
  j["version"] = "2.0";
  CHECK_THROWS_AS(system_from_json(j), FormatError);
  j["version"] = "1.7";
  CHECK_NOTHROW(system_from_json(j));
  Json bad = to_json(gen_su2(2));
  bad["fusion"][0] = {0, 0, 9, 1};
  CHECK_THROWS_AS(system_from_json(bad), FormatError);
  Json wrong = to_json(gen_su2(2));
  wrong["format"] = "modkit.graph";
  CHECK_THROWS_AS(system_from_json(wrong), FormatError);
  Json broken = to_json(gen_su2(2));
  broken["fusion"].erase(0);
  CHECK_THROWS_AS(system_from_json(broken), FormatError);
}

TEST_CASE("graph files round-trip") {
  const auto g = affine_ade("E7");
  const Json j = to_json(g);
  CHECK(j["meta"]["group_order"] == 48);
  const auto back = graph_from_json(j);
  CHECK(back.adjacency == g.adjacency);
  CHECK(back.star == g.star);
  CHECK(back.iota == g.iota);
}

TEST_CASE("invariant catalogs are deterministic and readable") {
  const auto s = gen_su2(16);
  const auto md = build_S_T(s.fusion, s.twists);
  const CatalogHeader h{"su2_16", 16, 1e-6};
  const std::string a = to_json(h, enumerate(md)).dump(2);
  const std::string b = to_json(h, enumerate(md)).dump(2);
  CHECK(a == b);
  const auto zs = invariants_from_json(Json::parse(a));
  REQUIRE(zs.size() == 3);
  CHECK(std::find(zs.begin(), zs.end(), su2_16_e7()) != zs.end());

  const auto path = std::filesystem::temp_directory_path() / "modkit_catalog_test.json";
  write_json(path.string(), Json::parse(a));
  CHECK(read_json(path.string()).dump(2) == a);
  std::filesystem::remove(path);
}

TEST_CASE("modular export carries S") {
  const auto s = gen_su2(2);
  const auto md = build_S_T(s.fusion, s.twists);
  const Json j = to_json(md);
  CHECK(j["S_re"][0][0].get<double>() == doctest::Approx(0.5));
  CHECK(j.contains("S_im"));
  CHECK(j.contains("fusion"));
}
