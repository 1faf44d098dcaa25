#include <doctest.h>

#include "modkit/acceptance.hpp"
#include "modkit/catalog.hpp"
#include "modkit/chiral.hpp"
#include "modkit/invariant.hpp"

using namespace modkit;

namespace {

ModularData su2(int k) {
  const auto s = gen_su2(k);
  return build_S_T(s.fusion, s.twists);
}

ModularData degenerate_z2() {
  const auto s = gen_cyclic(2, {Twist(0, 1), Twist(0, 1)});
  return braided_data(s.fusion, s.twists);
}

ModularData z2_times_z3() {
  const auto p = product_system(gen_cyclic(2, {Twist(0, 1), Twist(0, 1)}), gen_cyclic(3, quadratic_twists(3)));
  return braided_data(p.fusion, p.twists);
}

}  // namespace

TEST_CASE("global indices of the level 16 invariants") {
  const auto md = su2(16);
  const double w = md.w();
  for (const IMatrix& Z : {su2_16_d10(), su2_16_e7()}) {
    const auto g = global_indices(Z, md.dims());
    CHECK(g.w_plus == doctest::Approx(w / 2).epsilon(1e-12));
    CHECK(g.w_plus == g.w_minus);
    CHECK(g.w_zero * g.w_alpha == doctest::Approx(g.w_plus * g.w_minus).epsilon(1e-12));
  }
  const auto id = global_indices(su2_16_a17(), md.dims());
  CHECK(id.w_plus == doctest::Approx(w));
  CHECK(id.w_alpha == doctest::Approx(w));
  CHECK(id.w_zero == doctest::Approx(w));
}

TEST_CASE("chiral norms") {
  const auto md = su2(16);
  const auto e7 = chiral_norm_check(md, su2_16_e7());
  CHECK(e7.report.ok());
  CHECK(std::abs(e7.norm_plus - md.w()) < 1e-8);
  CHECK(std::abs(e7.norm_minus - md.w()) < 1e-8);

  const auto id = chiral_norm_check(md, su2_16_a17());
  CHECK(std::abs(id.norm_plus - md.w()) < 1e-8);
  CHECK(std::abs(id.inner - md.w()) < 1e-8);

  const auto z2 = chiral_norm_check(degenerate_z2(), IMatrix::Ones(2, 2));
  CHECK(z2.report.ok());
  CHECK(std::abs(z2.norm_plus - 4.0) < 1e-12);
}

TEST_CASE("chiral norms need an Omega-invariant Z") {
  CHECK_THROWS_AS(chiral_norm_check(su2(2), IMatrix::Ones(3, 3)), PreconditionError);
}

TEST_CASE("commutant check") {
  const auto md = su2(16);
  for (const auto& Z : enumerate_invariants(md)) {
    const auto c = commutant_check(md, Z);
    CHECK(c.y_residual < 1e-8);
    CHECK(c.omega_residual < 1e-8);
    CHECK(c.condition_holds);
  }
  const auto id = commutant_check(md, su2_16_a17());
  CHECK(id.y_residual == 0.0);
  CHECK(id.omega_residual == 0.0);
  CHECK(commutant_check(su2(2), IMatrix::Ones(3, 3)).y_residual > 0.1);
}

TEST_CASE("counting corollary") {
  const auto md = su2(16);
  CHECK(lr_counting(su2_16_a17(), md.dims()).w_delta_is_w_squared);
  const auto d10 = lr_counting(su2_16_d10(), md.dims());
  CHECK(d10.w_delta_is_w_squared);
  CHECK(d10.dzd == doctest::Approx(md.w()).epsilon(1e-10));
  CHECK(d10.xi_sum_squares == d10.sum_squares * d10.sum_squares);
  IMatrix big = su2_16_a17();
  big(0, 16) = 40;
  CHECK_FALSE(lr_counting(big, md.dims()).w_delta_is_w_squared);
  for (int k : {3, 8, 10}) {
    const auto m = su2(k);
    CHECK(lr_counting(IMatrix::Identity(k + 1, k + 1), m.dims()).w_delta_is_w_squared);
  }
}

TEST_CASE("degenerate-subsystem invariants") {
  const auto md4 = su2(4);
  const auto trivial = degenerate_invariant(md4, {0, 1, 2, 3, 4}, {0});
  CHECK(trivial.Z == IMatrix::Identity(5, 5));
  CHECK(trivial.report.ok());

  const auto z2 = degenerate_invariant(degenerate_z2(), {0, 1}, {0, 1});
  CHECK(z2.Z == IMatrix::Ones(2, 2));
  CHECK(z2.report.ok());

  const auto p = degenerate_invariant(z2_times_z3(), {0, 1, 2, 3, 4, 5}, {0, 3});
  IMatrix want = IMatrix::Zero(6, 6);
  for (int a = 0; a < 3; ++a)
    for (int x : {a, a + 3})
      for (int y : {a, a + 3}) want(x, y) = 1;
  CHECK(p.Z == want);
  CHECK(p.report.ok());
}

TEST_CASE("trivial Theta on a system with non-trivial conjugation still gives the identity") {
  const auto s = gen_cyclic(5, quadratic_twists(5));
  const auto md = braided_data(s.fusion, s.twists);
  CHECK(degenerate_invariant(md, {0, 1, 2, 3, 4}, {0}).Z == IMatrix::Identity(5, 5));
}

TEST_CASE("degenerate-subsystem preconditions") {
  const auto md = z2_times_z3();
  CHECK_THROWS_AS(degenerate_invariant(md, {0, 3}, {0, 3}), NotYClosed);
  CHECK_THROWS_AS(degenerate_invariant(md, {0, 1}, {0}), PreconditionError);        // not fusion closed
  CHECK_THROWS_AS(degenerate_invariant(md, {0, 1, 2, 3, 4, 5}, {0}), PreconditionError);  // Theta too small

  const auto fermion = gen_cyclic(2, {Twist(0, 1), Twist(1, 2)});
  const auto mf = braided_data(fermion.fusion, fermion.twists);
  CHECK_THROWS_AS(degenerate_invariant(mf, {0, 1}, {0, 1}), PreconditionError);
}

TEST_CASE("extension data pass-through") {
  const auto md = su2(16);
  const IMatrix b = IMatrix::Identity(17, 17);
  CHECK(verify_extension(md, md.S, md.T, b, b, su2_16_a17()).ok());
  CHECK_FALSE(verify_extension(md, md.S, md.T, b, b, su2_16_d10()).ok());
  CMatrix s_bad = md.S;
  s_bad(0, 0) += 0.1;
  CHECK_FALSE(verify_extension(md, s_bad, md.T, b, b, su2_16_a17()).ok());
}

TEST_CASE("product systems add twists") {
  const auto p = product_system(gen_su2(2), gen_cyclic(3, quadratic_twists(3)));
  CHECK(p.fusion.size() == 9);
  CHECK(p.twists[1 * 3 + 1] == Twist(3, 16) + Twist(1, 3));
  CHECK(verify_modular(build_S_T(p.fusion, p.twists)).ok());
}
