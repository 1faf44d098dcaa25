#include <doctest.h>

#include "modkit/acceptance.hpp"
#include "modkit/catalog.hpp"
#include "modkit/errors.hpp"
#include "modkit/invariant.hpp"
#include "modkit/oracle.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

ModularData su2(int k) {
  const auto s = gen_su2(k);
  return build_S_T(s.fusion, s.twists);
}

IMatrix d10_b() {
  IMatrix b = IMatrix::Zero(6, 17);
  const int pairs[4][2] = {{0, 16}, {2, 14}, {4, 12}, {6, 10}};
  for (int t = 0; t < 4; ++t) b(t, pairs[t][0]) = b(t, pairs[t][1]) = 1;
  b(4, 8) = 1;
  b(5, 8) = 1;
  return b;
}

}  // namespace

TEST_CASE("level 16 gives exactly the A17, D10 and E7 invariants") {
  const auto list = enumerate_invariants(su2(16));
  REQUIRE(list.size() == 3);
  CHECK(std::find(list.begin(), list.end(), su2_16_a17()) != list.end());
  CHECK(std::find(list.begin(), list.end(), su2_16_d10()) != list.end());
  CHECK(std::find(list.begin(), list.end(), su2_16_e7()) != list.end());
}

TEST_CASE("the displayed D10 and E7 matrices have traces 10 and 7") {
  CHECK(trace_counts(su2_16_d10()).trace == 10);
  CHECK(trace_counts(su2_16_e7()).trace == 7);
}

TEST_CASE("small levels") {
  const auto k2 = enumerate_invariants(su2(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == IMatrix::Identity(3, 3));
  const auto one = gen_cyclic(1, {Twist(0, 1)});
  const auto l1 = enumerate_invariants(build_S_T(one.fusion, one.twists));
  REQUIRE(l1.size() == 1);
  CHECK(l1[0](0, 0) == 1);
}

TEST_CASE("enumeration agrees with the brute-force odometer for k <= 6") {
  for (int k = 1; k <= 6; ++k) {
    const auto md = su2(k);
    CHECK(enumerate_invariants(md) == brute_force_invariants(md));
  }
  for (int k = 1; k <= 2; ++k) CHECK(enumerate_invariants(su2(k)) == brute_force_invariants(su2(k), false));
}

TEST_CASE("enumeration agrees with the vacuum-identity search for k <= 10") {
  for (int k = 1; k <= 10; ++k) {
    const auto md = su2(k);
    CHECK_MESSAGE(enumerate_invariants(md) == oracle::vacuum_weight_invariants(md), "k = " << k);
  }
}

TEST_CASE("cyclic systems: enumeration agrees with the vacuum-identity search") {
  for (int n = 2; n <= 7; ++n) {
    const auto s = gen_cyclic(n, quadratic_twists(n));
    const auto md = build_S_T(s.fusion, s.twists);
    CHECK_MESSAGE(enumerate_invariants(md) == oracle::vacuum_weight_invariants(md), "n = " << n);
  }
}

TEST_CASE("enumerated invariants respect bounds and the list is closed under conjugation") {
  for (int n : {3, 5, 7}) {
    const auto s = gen_cyclic(n, quadratic_twists(n));
    const auto md = build_S_T(s.fusion, s.twists);
    const auto list = enumerate_invariants(md);
    const IMatrix C = md.fusion.conjugation_matrix();
    CHECK(std::find(list.begin(), list.end(), C) != list.end());
    for (const auto& Z : list) {
      CHECK(std::find(list.begin(), list.end(), IMatrix(Z * C)) != list.end());
      CHECK(Z.sum() <= 1.0 / std::norm(md.S(0, 0)) + 1e-6);
      const CMatrix zc = Z.cast<std::complex<double>>();
      CHECK(max_abs(CMatrix(md.T * zc - zc * md.T)) == 0.0);
    }
  }
  const auto md = su2(28);
  const IMatrix bound = entry_bounds(md.dims());
  for (const auto& Z : enumerate_invariants(md)) {
    CHECK((Z.array() <= bound.array()).all());
    CHECK((Z.array() >= 0).all());
    CHECK(Z.sum() <= 1.0 / std::norm(md.S(0, 0)) + 1e-6);
  }
}

TEST_CASE("threaded search gives the same list") {
  EnumOptions o;
  o.threads = 4;
  CHECK(enumerate_invariants(su2(28), o) == enumerate_invariants(su2(28)));
}

TEST_CASE("node budget is enforced") {
  EnumOptions o;
  o.budget = 1;
  CHECK_THROWS_AS(enumerate_invariants(su2(28), o), BudgetExceeded);
}

TEST_CASE("classification flags") {
  const auto md = su2(16);
  const auto e7 = classify(su2_16_e7(), md);
  CHECK(e7.symmetric);
  CHECK_FALSE(e7.permutation);
  CHECK(e7.vacuum_symmetric);
  const auto id = classify(su2_16_a17(), md);
  CHECK(id.permutation);
  CHECK(id.self_conjugate);
  const auto s = gen_cyclic(5, quadratic_twists(5));
  const auto md5 = build_S_T(s.fusion, s.twists);
  CHECK_FALSE(classify(IMatrix::Identity(5, 5), md5).self_conjugate);
  const auto c = classify(md5.fusion.conjugation_matrix(), md5);
  CHECK(c.permutation);
}

TEST_CASE("type I factorisation") {
  const auto b = type_I_factor(su2_16_d10());
  REQUIRE(b.has_value());
  CHECK(b->rows() == 6);
  CHECK(b->transpose() * *b == su2_16_d10());
  CHECK(b->col(0).sum() == 1);
  CHECK((*b)(0, 0) == 1);
  CHECK_FALSE(type_I_factor(su2_16_e7()).has_value());
  const auto bi = type_I_factor(IMatrix::Identity(5, 5));
  REQUIRE(bi.has_value());
  CHECK(*bi == IMatrix::Identity(5, 5));
}

TEST_CASE("E7 is a twist of D10") {
  const IMatrix b = d10_b();
  const auto theta = twist_factor(su2_16_e7(), b);
  REQUIRE(theta.has_value());
  // rows 1 = (2,14) and one of the two chi_8 rows are exchanged; the rest are fixed
  const auto& t = *theta;
  CHECK(t[0] == 0);
  CHECK(t[2] == 2);
  CHECK(t[3] == 3);
  CHECK((t[1] == 4 || t[1] == 5));
  CHECK(t[t[1]] == 1);
  IMatrix sum = IMatrix::Zero(17, 17);
  for (int r = 0; r < 6; ++r) sum += b.row(r).transpose() * b.row(t[r]);
  CHECK(sum == su2_16_e7());
}

TEST_CASE("twist factor of a type I invariant with its own b is the identity") {
  const auto theta = twist_factor(su2_16_d10(), d10_b());
  REQUIRE(theta.has_value());
  for (int r = 0; r < 6; ++r) CHECK(d10_b().row((*theta)[r]) == d10_b().row(r));
}

TEST_CASE("D10 is not a twist of the diagonal") {
  CHECK_FALSE(twist_factor(su2_16_d10(), IMatrix::Identity(17, 17)).has_value());
}

TEST_CASE("chiral counts only see the type I parent") {
  const IMatrix b = d10_b();
  const auto c = trace_counts(su2_16_e7(), &b, &b);
  CHECK(c.trace == 7);
  REQUIRE(c.chiral_trace_plus.has_value());
  CHECK(*c.chiral_trace_plus == 10);
  CHECK(*c.chiral_dim_plus == 10);
  CHECK(c.sum_squares == su2_16_e7().cwiseProduct(su2_16_e7()).sum());
}

TEST_CASE("enumerate attaches witnesses") {
  const auto list = enumerate(su2(16));
  int type_i = 0;
  for (const auto& z : list) {
    if (z.type_I) {
      ++type_i;
      CHECK(z.type_label() == "I");
      CHECK(z.type_I->transpose() * *z.type_I == z.Z);
    } else {
      CHECK(z.Z == su2_16_e7());
      CHECK(z.type_label() == "II-or-III");
      REQUIRE(z.parent.has_value());
      CHECK(list[*z.parent].Z == su2_16_d10());
      CHECK(z.theta.has_value());
    }
  }
  CHECK(type_i == 2);
}

TEST_CASE("enumeration refuses data that is not modular") {
  const auto s = gen_cyclic(2, {Twist(0, 1), Twist(0, 1)});
  CHECK_THROWS_AS(enumerate_invariants(braided_data(s.fusion, s.twists)), PreconditionError);
}
