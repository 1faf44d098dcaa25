#pragma once

#include <cstdint>
#include <vector>

#include "modkit/catalog.hpp"
#include "modkit/errors.hpp"
#include "modkit/matrix.hpp"
#include "modkit/modular.hpp"
#include "modkit/report.hpp"

namespace modkit {

/// Raised when the subsystem Gamma fails sum_{g in Gamma} conj(Y_{a,g}) Y_{0,g} = 0 for some a outside Gamma.
struct NotYClosed : Error {
  using Error::Error;
};

struct GlobalIndices {
  double w = 0;
  double w_plus = 0;
  double w_minus = 0;
  double w_alpha = 0;
  double w_zero = 0;
  double vacuum_column_sum = 0;  // sum_a d_a Z_{a,0} = w / w_+
  double vacuum_row_sum = 0;     // sum_a Z_{0,a} d_a = w / w_-
  double dzd = 0;                // sum d Z d = w^2 / w_alpha
};

GlobalIndices global_indices(const IMatrix& Z, const std::vector<double>& d);

struct ChiralNorms {
  std::complex<double> norm_plus;   // sum Y_{0,a} Y_{a,b} Z_{b,0}
  std::complex<double> norm_minus;  // sum Y_{0,a} Y_{a,b} Z_{0,b}
  double degenerate_sum = 0;        // w sum_{a deg} d_a Z_{a,0}
  std::complex<double> inner;       // sum d_a conj(w_a) w_b Z_{a,b} d_b
  double dzd = 0;
  Report report;
};

/// Throws PreconditionError when Z does not commute with Omega.
ChiralNorms chiral_norm_check(const ModularData& md, const IMatrix& Z, double tol = 1e-6);

struct CommutantCheck {
  double y_residual = 0;
  double omega_residual = 0;
  double degenerate_vacuum_sum = 0;  // sum_{a deg} d_a Z_{a,0}
  double index_ratio = 0;            // w / w_alpha
  bool condition_holds = false;
};

CommutantCheck commutant_check(const ModularData& md, const IMatrix& Z);

struct LrCounting {
  double dzd = 0;
  double v0 = 0;       // (sum d Z d)^2
  double w_delta = 0;  // w^4 / v0
  double w = 0;
  bool w_delta_is_w_squared = false;
  std::int64_t sum_squares = 0;
  std::int64_t xi_sum_squares = 0;  // (sum Z^2)^2
};

LrCounting lr_counting(const IMatrix& Z, const std::vector<double>& d);

struct DegenerateInvariant {
  IMatrix Z;
  Report report;
};

/// Z_{a,b} = sum_{t in Theta} N^t_{conj a, b} d_t on Gamma, zero elsewhere.
/// Throws PreconditionError (Gamma not a subsystem, Theta wrong, non-bosonic,
/// non-integer dimension) or NotYClosed.
DegenerateInvariant degenerate_invariant(const ModularData& md, const std::vector<int>& gamma,
                                         const std::vector<int>& theta, double tol = 1e-6);

/// Degenerate sectors of the subsystem Gamma (Rehren sums restricted to Gamma).
std::vector<int> subsystem_degenerate_sectors(const ModularData& md, const std::vector<int>& gamma,
                                              double tol = 1e-6);

/// Checks S_ext b = b S and T_ext b = b T for both b and Z = b+^T b-.
Report verify_extension(const ModularData& md, const CMatrix& s_ext, const CMatrix& t_ext,
                        const IMatrix& b_plus, const IMatrix& b_minus, const IMatrix& Z,
                        double tol = 1e-9);

/// Tensor product of two catalog systems with additive twists.
CatalogSystem product_system(const CatalogSystem& a, const CatalogSystem& b);

}  // namespace modkit
