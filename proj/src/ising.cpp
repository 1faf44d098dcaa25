#include "modkit/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "modkit/errors.hpp"

namespace modkit {

double IsingPartition::relative_difference() const {
  return std::abs(brute - trace) / std::max(std::abs(brute), std::abs(trace));
}

namespace {

// sum over the M periodic bonds (i, i+1 mod M) inside one row; M = 1 gives the self bond s s = 1
int row_energy(std::uint32_t row, int M) {
  int e = 0;
  for (int i = 0; i < M; ++i) {
    const int a = (row >> i) & 1;
    const int b = (row >> ((i + 1) % M)) & 1;
    e += a == b ? 1 : -1;
  }
  return e;
}

int row_coupling(std::uint32_t a, std::uint32_t b, int M) {
  const std::uint32_t mask = M == 32 ? ~0u : ((1u << M) - 1);
  return M - 2 * std::popcount((a ^ b) & mask);
}

}  // namespace

IsingPartition ising_partition(int M, int N, double beta, double J) {
  if (M < 1 || N < 1) throw PreconditionError("M and N must be positive");
  if (M * N > 24) throw PreconditionError("brute force needs M*N <= 24");
  IsingPartition out;

  const std::uint64_t configs = std::uint64_t{1} << (M * N);
  const std::uint32_t row_mask = (1u << M) - 1;
  const long double bj = static_cast<long double>(beta) * J;
  long double brute = 0;
  for (std::uint64_t s = 0; s < configs; ++s) {
    int e = 0;
    for (int r = 0; r < N; ++r) {
      const auto row = static_cast<std::uint32_t>(s >> (r * M)) & row_mask;
      const auto next = static_cast<std::uint32_t>(s >> (((r + 1) % N) * M)) & row_mask;
      e += row_energy(row, M) + row_coupling(row, next, M);
    }
    brute += std::exp(bj * e);
  }
  out.brute = static_cast<double>(brute);

  const int dim = 1 << M;
  auto weight = [&](int a, int b) {
    return std::exp(bj * (0.5L * row_energy(a, M) + row_coupling(a, b, M) + 0.5L * row_energy(b, M)));
  };
  long double trace = 0;
  if (N == 1) {
    for (int a = 0; a < dim; ++a) trace += weight(a, a);
  } else if (N == 2) {
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) trace += weight(a, b) * weight(b, a);
  } else {
    if (M > 12) throw PreconditionError("transfer matrix needs M <= 12 when N > 2");
    using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    LMatrix T(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) T(a, b) = weight(a, b);
    LMatrix P = T;
    for (int i = 1; i < N; ++i) P = P * T;
    trace = P.trace();
  }
  out.trace = static_cast<double>(trace);
  return out;
}

}  // namespace modkit
