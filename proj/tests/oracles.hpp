#pragma once

// Reference computations used only by the tests. None of them calls the
// library routine it is compared against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "modkit/matrix.hpp"
#include "modkit/modular.hpp"

namespace oracle {

/// Standard SU(2)_k S matrix.
inline modkit::RMatrix su2_S(int k) {
  modkit::RMatrix S(k + 1, k + 1);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      S(a, b) = std::sqrt(2.0 / (k + 2)) * std::sin((a + 1) * (b + 1) * std::numbers::pi / (k + 2));
  return S;
}

inline bool row_major_less(const modkit::IMatrix& x, const modkit::IMatrix& y) {
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c)
      if (x(r, c) != y(r, c)) return x(r, c) < y(r, c);
  return false;
}

/// Invariants of a system with a real positive vacuum row, by DFS over the
/// equal-twist cells. The only pruning rule is the vacuum identity
/// sum_ab S_0a Z_ab S_0b = Z_00 = 1 (all weights positive); every leaf gets
/// a full S-commutator check.
inline std::vector<modkit::IMatrix> vacuum_weight_invariants(const modkit::ModularData& md) {
  const int n = md.size();
  std::vector<std::pair<int, int>> cells;
  std::vector<double> weight;
  std::vector<std::int64_t> bound;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(a == 0 && b == 0) && md.twists[a] == md.twists[b]) {
        cells.emplace_back(a, b);
        weight.push_back(md.S(0, a).real() * md.S(0, b).real());
        bound.push_back(static_cast<std::int64_t>(std::floor(md.dims()[a] * md.dims()[b] + 1e-9)));
      }
  const double target = 1.0 - std::norm(md.S(0, 0));
  std::vector<modkit::IMatrix> out;
  modkit::IMatrix Z = modkit::IMatrix::Zero(n, n);
  Z(0, 0) = 1;
  std::function<void(std::size_t, double)> go = [&](std::size_t i, double used) {
    if (i == cells.size()) {
      if (std::abs(used - target) > 1e-9) return;
      const modkit::CMatrix zc = Z.cast<std::complex<double>>();
      if ((md.S * zc - zc * md.S).cwiseAbs().maxCoeff() < 1e-6) out.push_back(Z);
      return;
    }
    auto& z = Z(cells[i].first, cells[i].second);
    for (std::int64_t v = 0; v <= bound[i] && used + static_cast<double>(v) * weight[i] <= target + 1e-9; ++v) {
      z = v;
      go(i + 1, used + static_cast<double>(v) * weight[i]);
    }
    z = 0;
  };
  go(0, 0.0);
  std::sort(out.begin(), out.end(), row_major_less);
  return out;
}

/// n_j^g from a naive matrix-vector loop on the affine adjacency.
inline std::vector<std::vector<std::int64_t>> mckay_naive(const modkit::IMatrix& A, int star, int J) {
  const int n = static_cast<int>(A.rows());
  std::vector<std::vector<std::int64_t>> out(J + 1, std::vector<std::int64_t>(n, 0));
  out[0][star] = 1;
  for (int j = 0; j < J; ++j)
    for (int g = 0; g < n; ++g) {
      std::int64_t s = 0;
      for (int h = 0; h < n; ++h) s += A(g, h) * out[j][h];
      out[j + 1][g] = s - (j == 0 ? 0 : out[j - 1][g]);
    }
  return out;
}

/// Multiplicity of the Z_n character c in the restriction of D_j, with Z_n
/// embedded diagonally as diag(z, z^-1): weights z^{j-2m}, m = 0..j.
inline std::int64_t cyclic_restriction(int n, int j, int c) {
  std::complex<double> total = 0;
  for (int a = 0; a < n; ++a) {
    std::complex<double> chi = 0;
    for (int m = 0; m <= j; ++m) chi += std::polar(1.0, 2 * std::numbers::pi * a * (j - 2 * m) / n);
    total += chi * std::polar(1.0, -2 * std::numbers::pi * a * c / n);
  }
  return std::llround(total.real() / n);
}

}  // namespace oracle
