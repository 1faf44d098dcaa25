#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "modkit/fusion.hpp"
#include "modkit/matrix.hpp"
#include "modkit/report.hpp"
#include "modkit/twist.hpp"

namespace modkit {

/// Paper: omega_a omega_b / omega_c. Inverse: omega_c / (omega_a omega_b), giving conj(Y).
enum class PhaseConvention { Paper, Inverse };

struct ModularOptions {
  PhaseConvention convention = PhaseConvention::Paper;
  double tolerance = 1e-9;             // matrix identities
  double degeneracy_tolerance = 1e-6;  // Rehren dichotomy
};

struct CentralCharge {
  double value = 0.0;            // in [0, 8)
  std::optional<Rational> exact;  // set when recognised as a small-denominator rational
};

/// Y, Omega and, when z != 0, S, T and the central charge.
struct ModularData {
  FusionSystem fusion;
  Twists twists;
  PhaseConvention convention = PhaseConvention::Paper;
  CMatrix Y;
  CVector omega;
  std::complex<double> z;
  bool normalizable = false;
  CentralCharge c;
  CMatrix S;
  CMatrix T;

  int size() const { return fusion.size(); }
  const std::vector<double>& dims() const { return fusion.dims(); }
  double w() const { return fusion.global_index(); }
  /// Omega commutation is decided on the exact twists.
  bool same_twist(int a, int b) const { return twists[a] == twists[b]; }
};

CMatrix build_Y(const FusionSystem& f, const Twists& twists,
                PhaseConvention convention = PhaseConvention::Paper);

/// z = sum d^2 omega and c = 4 arg(z)/pi mod 8. Throws DegenerateNormalization if |z| < 1e-9.
std::pair<std::complex<double>, CentralCharge> central_charge(const FusionSystem& f,
                                                              const Twists& twists);

/// Y, Omega and z only; S/T are filled in when z != 0.
ModularData braided_data(FusionSystem f, Twists twists, const ModularOptions& opts = {});

/// Full modular data; propagates DegenerateNormalization.
ModularData build_S_T(FusionSystem f, Twists twists, const ModularOptions& opts = {});

/// S recomputed in long double from the exact fusion data and twists.
LCMatrix extended_precision_S(const ModularData& md);

Report verify_modular(const ModularData& md, double tol = 1e-9);
Report verlinde_check(const ModularData& md, double tol = 1e-7);

/// Labels whose Rehren row sum sum_b Y_{a,b} Y_{b,0} equals w d_a. Throws
/// DichotomyViolation when a row sum is neither w d_a nor 0.
std::vector<int> degenerate_sectors(const CMatrix& Y, const std::vector<double>& d, double w,
                                    double tol = 1e-6);

/// Best rational approximation p/q with q <= max_den and |x - p/q| < tol, if any.
std::optional<Rational> snap_rational(double x, std::int64_t max_den = 10000, double tol = 1e-9);

}  // namespace modkit
