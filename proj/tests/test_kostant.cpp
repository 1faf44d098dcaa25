#include <doctest.h>

#include "modkit/catalog.hpp"
#include "modkit/errors.hpp"
#include "modkit/kostant.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

std::vector<std::string> ade_names() {
  std::vector<std::string> out;
  for (int l = 1; l <= 8; ++l) out.push_back("A" + std::to_string(l));
  for (int l = 4; l <= 8; ++l) out.push_back("D" + std::to_string(l));
  for (int l = 6; l <= 8; ++l) out.push_back("E" + std::to_string(l));
  return out;
}

KostantSeries series_for(const std::string& name) {
  return mckay_series(affine_ade(name), default_truncation(graph_meta(name).coxeter));
}

}  // namespace

TEST_CASE("E8 series at the extension vertex") {
  const auto a = affine_ade("E8");
  const auto s = mckay_series(a, 31);
  const auto naive = oracle::mckay_naive(a.adjacency, a.star, 31);
  for (int j = 0; j <= 31; ++j) CHECK(s.n[j] == naive[j]);
  for (int j = 0; j <= 31; ++j) {
    const bool one = j == 0 || j == 12 || j == 20 || j == 24 || j == 30;
    CHECK_MESSAGE(s.n[j][a.star] == (one ? 1 : 0), "j = " << j);
  }
}

TEST_CASE("series agree with the naive loop on every graph") {
  for (const auto& name : ade_names()) {
    const auto a = affine_ade(name);
    const auto s = mckay_series(a, 40);
    CHECK(s.n == oracle::mckay_naive(a.adjacency, a.star, 40));
  }
}

TEST_CASE("first step restricts the defining representation") {
  for (const auto& name : ade_names()) {
    const auto a = affine_ade(name);
    const auto s = mckay_series(a, 2);
    for (int g = 0; g < a.size(); ++g) CHECK(s.n[1][g] == a.adjacency(a.star, g));
  }
}

TEST_CASE("affine A series match the cyclic character sum") {
  for (int l = 1; l <= 8; ++l) {
    const auto a = affine_ade("A" + std::to_string(l));
    const auto s = mckay_series(a, 30);
    for (int j = 0; j <= 30; ++j) {
      CHECK(s.n[j][a.star] == oracle::cyclic_restriction(l + 1, j, 0));
      for (int g = 0; g < l; ++g) CHECK(s.n[j][g] == oracle::cyclic_restriction(l + 1, j, g + 1));
    }
  }
  // Z_2: every weight of D_j has the parity of j
  const auto s = mckay_series(affine_ade("A1"), 10);
  for (int j = 0; j <= 10; ++j) {
    CHECK(s.n[j][1] == (j % 2 == 0 ? j + 1 : 0));
    CHECK(s.n[j][0] == (j % 2 == 1 ? j + 1 : 0));
  }
}

TEST_CASE("series are bounded, satisfy the recursion and the mark identity") {
  for (const auto& name : ade_names()) {
    const auto a = affine_ade(name);
    const auto s = series_for(name);
    const auto marks = affine_marks(a);
    CHECK(marks[a.star] == 1);
    for (int j = 0; j <= s.truncation; ++j) {
      std::int64_t total = 0;
      for (int g = 0; g < a.size(); ++g) {
        CHECK(s.n[j][g] >= 0);
        CHECK(s.n[j][g] <= j + 1);
        total += marks[g] * s.n[j][g];
      }
      CHECK(total == j + 1);
    }
    // q-series identity: sum_h A_gh f_h = (q + 1/q) f_g - delta_* /q, coefficient of q^j for j < J
    for (int j = 0; j < s.truncation; ++j)
      for (int g = 0; g < a.size(); ++g) {
        std::int64_t lhs = 0;
        for (int h = 0; h < a.size(); ++h) lhs += a.adjacency(g, h) * s.n[j][h];
        const std::int64_t rhs = (j > 0 ? s.n[j - 1][g] : 0) + s.n[j + 1][g];
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("non-McKay input is rejected") {
  Graph g = affine_ade("D4");
  g.adjacency(0, 2) = g.adjacency(2, 0) = 1;  // joining two leaves gives a norm above 2
  CHECK_THROWS_AS(mckay_series(g, 40), PreconditionError);
}

TEST_CASE("Kostant extraction for fixed pairs") {
  const auto e8 = series_for("E8");
  const auto good = kostant_poly(e8, 12, 20, 30);
  REQUIRE(good.ok);
  for (const auto& p : good.polys)
    if (p.vertex == e8.graph.star) {
      Poly want(31, 0);
      want[0] = want[30] = 1;
      CHECK(poly_trim(p.p) == poly_trim(want));
    }
  CHECK_FALSE(kostant_poly(e8, 10, 22, 30).ok);
  CHECK(kostant_poly(series_for("D4"), 4, 4, 6).ok);
  CHECK_THROWS_AS(kostant_poly(mckay_series(affine_ade("E8"), 40), 12, 20, 30), PreconditionError);
}

TEST_CASE("exactly one pair certifies and it has r + s = h + 2") {
  struct Want {
    std::string name;
    int r, s;
  };
  for (const Want& w : std::vector<Want>{{"E8", 12, 20}, {"E7", 8, 12}, {"E6", 6, 8}, {"D4", 4, 4}, {"D7", 4, 10}, {"A1", 2, 2}, {"A5", 2, 6}}) {
    const auto meta = graph_meta(w.name);
    const auto rs = find_rs(series_for(w.name), meta.coxeter, meta.group_order);
    CHECK(rs.r == w.r);
    CHECK(rs.s == w.s);
  }
  for (const auto& name : ade_names()) {
    const auto meta = graph_meta(name);
    const auto rs = find_rs(series_for(name), meta.coxeter, meta.group_order);
    CHECK(rs.certified.size() == 1);
    CHECK(rs.r + rs.s == meta.coxeter + 2);
    CHECK(rs.product_is_twice_group_order);
    CHECK_FALSE(rs.product_is_group_order);
    for (const auto& p : rs.extraction.polys) {
      for (auto c : p.p) CHECK(c >= 0);
      CHECK(static_cast<int>(poly_trim(p.p).size()) <= meta.coxeter + 1);
    }
    CHECK(rs.extraction.shape_ok);
  }
}

TEST_CASE("Kostant polynomials match nimrep entries on D and E graphs") {
  for (const auto& name : ade_names()) {
    if (name[0] == 'A') continue;
    const auto meta = graph_meta(name);
    const auto s = series_for(name);
    const auto rs = find_rs(s, meta.coxeter, meta.group_order);
    const auto rep = nimrep_match(ade_graph(name), s, rs);
    CHECK_MESSAGE(rep.ok(), name);
    CHECK(rep.find("<theta, lambda_k> = 1")->pass);
  }
}

TEST_CASE("on A graphs the polynomial of vertex g collects both end vertices") {
  for (int l = 2; l <= 8; ++l) {
    const std::string name = "A" + std::to_string(l);
    const auto meta = graph_meta(name);
    const auto s = series_for(name);
    const auto rs = find_rs(s, meta.coxeter, meta.group_order);
    for (const auto& p : rs.extraction.polys) {
      if (p.vertex == s.graph.star) continue;
      Poly want(l + 1, 0);
      want[p.vertex + 1] += 1;
      want[l - p.vertex] += 1;
      CHECK(poly_trim(p.p) == poly_trim(want));
    }
    CHECK_FALSE(nimrep_match(ade_graph(name), s, rs).ok());
  }
}

TEST_CASE("polynomial helpers") {
  CHECK(poly_mul({1, 1}, {1, -1}) == Poly{1, 0, -1});
  CHECK(poly_trim(poly_add({1, 2}, {0, -2, 0})) == Poly{1});
  CHECK(poly_shift({1}, 3) == Poly{0, 0, 0, 1});
  CHECK(poly_str({1, 0, -1, 2}) == "1 - q^2 + 2*q^3");
  CHECK(poly_str({}) == "0");
}
