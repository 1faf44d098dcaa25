#include <doctest.h>

#include <cmath>

#include "modkit/catalog.hpp"
#include "modkit/errors.hpp"
#include "modkit/modular.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

ModularData su2(int k, const ModularOptions& o = {}) {
  const auto s = gen_su2(k);
  return build_S_T(s.fusion, s.twists, o);
}

CatalogSystem degenerate_z2() { return gen_cyclic(2, {Twist(0, 1), Twist(0, 1)}); }

}  // namespace

TEST_CASE("Y of the degenerate Z_2 system is all ones") {
  const auto s = degenerate_z2();
  const CMatrix Y = build_Y(s.fusion, s.twists);
  CHECK(max_abs(Y - CMatrix::Ones(2, 2)) < 1e-15);
  const auto [z, c] = central_charge(s.fusion, s.twists);
  CHECK(std::abs(z - 2.0) < 1e-15);
  CHECK(c.value == doctest::Approx(0.0));
}

TEST_CASE("vacuum row of Y is the dimension vector") {
  for (int k : {2, 7, 16}) {
    const auto md = su2(k);
    for (int a = 0; a <= k; ++a) {
      CHECK(std::abs(md.Y(0, a) - md.dims()[a]) < 1e-10);
      CHECK(std::abs(md.Y(a, 0) - md.dims()[a]) < 1e-10);
    }
  }
}

TEST_CASE("S agrees with the closed-form SU(2)_k matrix") {
  for (int k = 1; k <= 28; ++k) {
    const auto md = su2(k);
    const RMatrix oracle = oracle::su2_S(k);
    CHECK(max_abs(CMatrix(md.S - oracle.cast<std::complex<double>>())) < 1e-10);
  }
}

TEST_CASE("central charge of SU(2)_k is 3k/(k+2) mod 8") {
  for (int k = 1; k <= 28; ++k) {
    const auto md = su2(k);
    const double expected = std::fmod(3.0 * k / (k + 2), 8.0);
    CHECK(md.c.value == doctest::Approx(expected).epsilon(1e-8));
    REQUIRE(md.c.exact.has_value());
    CHECK(*md.c.exact == Rational(3 * k, k + 2));
  }
}

TEST_CASE("cancelling z is a degenerate normalization") {
  const auto s = gen_cyclic(2, {Twist(0, 1), Twist(1, 2)});
  CHECK_THROWS_AS(central_charge(s.fusion, s.twists), DegenerateNormalization);
  CHECK_THROWS_AS(build_S_T(s.fusion, s.twists), DegenerateNormalization);
  const auto md = braided_data(s.fusion, s.twists);
  CHECK_FALSE(md.normalizable);
}

TEST_CASE("SU(2)_2 has S_00 = 1/2") {
  CHECK(su2(2).S(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(su2(2).S(0, 0).imag()) < 1e-12);
}

TEST_CASE("modular relations hold on the catalog") {
  for (int k : {2, 4, 10, 16, 28}) CHECK(verify_modular(su2(k)).ok());
  for (int n = 1; n <= 9; ++n) {
    const auto s = gen_cyclic(n, quadratic_twists(n));
    const auto md = build_S_T(s.fusion, s.twists);
    const auto rep = verify_modular(md);
    CHECK_MESSAGE(rep.ok(), "Z_" << n);
    CHECK(verlinde_check(md).ok());
  }
}

TEST_CASE("one-label system") {
  const auto s = gen_cyclic(1, {Twist(0, 1)});
  const auto md = build_S_T(s.fusion, s.twists);
  CHECK(verify_modular(md).ok());
  CHECK(std::abs(md.S(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(md.T(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("a perturbed S fails unitarity with its residual") {
  auto md = su2(4);
  md.S(1, 2) += 1e-3;
  const auto rep = verify_modular(md);
  const Check* u = rep.find("S unitary");
  REQUIRE(u != nullptr);
  CHECK_FALSE(u->pass);
  CHECK(u->residual > 5e-4);
}

TEST_CASE("Verlinde formula") {
  CHECK(verlinde_check(su2(16)).ok());
  const auto s = degenerate_z2();
  const auto md = braided_data(s.fusion, s.twists);
  const auto rep = verlinde_check(md);
  REQUIRE(rep.checks.size() == 1);
  CHECK_FALSE(rep.checks[0].detail.empty());
}

TEST_CASE("inverse phase convention conjugates Y") {
  const auto s = gen_su2(5);
  ModularOptions inv;
  inv.convention = PhaseConvention::Inverse;
  const CMatrix a = build_Y(s.fusion, s.twists);
  const CMatrix b = build_Y(s.fusion, s.twists, PhaseConvention::Inverse);
  CHECK(max_abs(CMatrix(a.conjugate() - b)) < 1e-12);
  CHECK(verify_modular(build_S_T(s.fusion, s.twists, inv)).ok());
}

TEST_CASE("degenerate sectors") {
  const auto md16 = su2(16);
  CHECK(degenerate_sectors(md16.Y, md16.dims(), md16.w()) == std::vector<int>{0});
  const auto s = degenerate_z2();
  const auto md = braided_data(s.fusion, s.twists);
  CHECK(degenerate_sectors(md.Y, md.dims(), md.w()) == std::vector<int>{0, 1});
  const auto z4 = gen_cyclic(4, quadratic_twists(4));
  CHECK(z4.twists[1] == Twist(1, 8));
  const auto md4 = braided_data(z4.fusion, z4.twists);
  CHECK(degenerate_sectors(md4.Y, md4.dims(), md4.w()) == std::vector<int>{0});
}

TEST_CASE("dichotomy violation is reported") {
  const auto s = gen_su2(3);
  const auto md = braided_data(s.fusion, s.twists);
  CMatrix Y = md.Y;
  Y(1, 1) += 0.5;
  CHECK_THROWS_AS(degenerate_sectors(Y, md.dims(), md.w()), DichotomyViolation);
}

TEST_CASE("vacuum column of S is positive and gives the dimensions") {
  for (int k = 1; k <= 20; ++k) {
    const auto md = su2(k);
    for (int a = 0; a <= k; ++a) {
      CHECK(md.S(0, a).real() > 0);
      CHECK(md.S(0, a).real() / md.S(0, 0).real() == doctest::Approx(md.dims()[a]).epsilon(1e-8));
    }
  }
}

TEST_CASE("extended precision S agrees with double S") {
  const auto md = su2(16);
  const LCMatrix L = extended_precision_S(md);
  double worst = 0;
  for (int a = 0; a < 17; ++a)
    for (int b = 0; b < 17; ++b)
      worst = std::max(worst, static_cast<double>(std::abs(L(a, b) - LComplex(md.S(a, b).real(), md.S(a, b).imag()))));
  CHECK(worst < 1e-12);
}

TEST_CASE("rational snapping") {
  CHECK(snap_rational(8.0 / 3) == Rational(8, 3));
  CHECK_FALSE(snap_rational(std::sqrt(2.0)).has_value());
}

TEST_CASE("twists are exact rationals in [0, 1)") {
  CHECK(Twist(35, 32) == Twist(3, 32));
  CHECK(Twist(-1, 4) == Twist(3, 4));
  CHECK((Twist(3, 4) + Twist(1, 2)) == Twist(1, 4));
  const auto s = gen_su2(6);
  CHECK(s.twists[1] == s.twists[5]);
  CHECK_FALSE(s.twists[2] == s.twists[4]);
}
