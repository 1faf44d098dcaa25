#include "modkit/modular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "modkit/errors.hpp"

namespace modkit {

namespace {

template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> y_matrix(
    const FusionRules& rules, const std::vector<Real>& d, const Twists& twists,
    PhaseConvention convention) {
  const int n = rules.size();
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> y(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::complex<Real> s = 0;
      for (int c = 0; c < n; ++c) {
        const int mult = rules.fusion(a, b, c);
        if (mult == 0) continue;
        Twist t = twists[a] + twists[b] - twists[c];
        if (convention == PhaseConvention::Inverse) t = Twist(0, 1) - t;
        s += t.phase<Real>() * static_cast<Real>(mult) * d[c];
      }
      y(a, b) = s;
    }
  return y;
}

void require_twists(const FusionSystem& f, const Twists& twists) {
  if (static_cast<int>(twists.size()) != f.size())
    throw PreconditionError("twist count does not match label count");
  if (!(twists.empty() || twists[0] == Twist()))
    throw PreconditionError("vacuum twist must be 0");
}

}  // namespace

CMatrix build_Y(const FusionSystem& f, const Twists& twists, PhaseConvention convention) {
  require_twists(f, twists);
  return y_matrix<double>(f.rules(), f.dims(), twists, convention);
}

std::optional<Rational> snap_rational(double x, std::int64_t max_den, double tol) {
  // continued-fraction convergents
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(r);
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t p2 = a * p1 + p0;
    const std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den) break;
    if (std::abs(x - static_cast<double>(p2) / static_cast<double>(q2)) < tol)
      return Rational(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - fl;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

std::pair<std::complex<double>, CentralCharge> central_charge(const FusionSystem& f,
                                                              const Twists& twists) {
  require_twists(f, twists);
  std::complex<double> z = 0;
  for (int a = 0; a < f.size(); ++a) z += f.dim(a) * f.dim(a) * twists[a].phase();
  if (std::abs(z) < 1e-9) throw DegenerateNormalization("|z| vanishes; S and c are undefined");
  CentralCharge c;
  const double turns = std::arg(z) / std::numbers::pi;  // in (-1, 1]
  c.value = std::fmod(4.0 * turns + 8.0, 8.0);
  if (auto q = snap_rational(turns)) {
    Rational cv = Rational(4) * *q;
    while (cv < 0) cv += 8;
    while (cv >= 8) cv -= 8;
    c.exact = cv;
    c.value = boost::rational_cast<double>(cv);
  }
  return {z, c};
}

ModularData braided_data(FusionSystem f, Twists twists, const ModularOptions& opts) {
  require_twists(f, twists);
  const int n = f.size();
  ModularData md{std::move(f), std::move(twists), opts.convention, {}, {}, {}, false, {}, {}, {}};
  md.Y = build_Y(md.fusion, md.twists, opts.convention);
  md.omega.resize(n);
  md.z = 0;
  for (int a = 0; a < n; ++a) {
    md.omega(a) = md.twists[a].phase();
    md.z += md.fusion.dim(a) * md.fusion.dim(a) * md.omega(a);
  }
  if (std::abs(md.z) >= 1e-9) {
    auto [z, c] = central_charge(md.fusion, md.twists);
    md.normalizable = true;
    md.c = c;
    md.S = md.Y / std::abs(z);
    const std::complex<double> global =
        std::polar(1.0, -std::numbers::pi * md.c.value / 12.0);
    md.T = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) md.T(a, a) = global * md.omega(a);
  }
  return md;
}

ModularData build_S_T(FusionSystem f, Twists twists, const ModularOptions& opts) {
  ModularData md = braided_data(std::move(f), std::move(twists), opts);
  if (!md.normalizable) throw DegenerateNormalization("|z| vanishes; S and c are undefined");
  return md;
}

LCMatrix extended_precision_S(const ModularData& md) {
  const auto d = perron_frobenius_dimensions<long double>(md.fusion.rules());
  LCMatrix y = y_matrix<long double>(md.fusion.rules(), d, md.twists, md.convention);
  LComplex z = 0;
  for (int a = 0; a < md.size(); ++a) z += d[a] * d[a] * md.twists[a].phase<long double>();
  return y / std::abs(z);
}

Report verify_modular(const ModularData& md, double tol) {
  Report r;
  if (!md.normalizable) {
    r.add("normalization", false, 0.0, "z = 0: S undefined");
    return r;
  }
  const int n = md.size();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix& S = md.S;
  const CMatrix& T = md.T;
  const double unit_s = max_abs(S * S.adjoint() - id);
  r.add("S unitary", unit_s < tol, unit_s);
  const double unit_t = max_abs(T * T.adjoint() - id);
  r.add("T unitary", unit_t < tol, unit_t);
  const double st = max_abs(T * S * T * S * T - S);
  r.add("TSTST = S", st < tol, st);

  const CMatrix c2 = S * S;
  double perm_res = 0.0;
  IMatrix c = IMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto v = c2(a, b);
      const double rounded = std::round(v.real());
      perm_res = std::max(perm_res, std::abs(v - std::complex<double>(rounded, 0.0)));
      c(a, b) = static_cast<std::int64_t>(rounded);
    }
  const bool is_perm = perm_res < tol && is_permutation_matrix(c);
  r.add("S^2 permutation", is_perm, perm_res);
  const bool involution = is_perm && (c * c == IMatrix::Identity(n, n));
  r.add("C^2 = 1", involution);
  const bool conj = is_perm && c == md.fusion.conjugation_matrix();
  r.add("C = conjugation", conj);
  return r;
}

Report verlinde_check(const ModularData& md, double tol) {
  Report r;
  if (!md.normalizable) {
    r.add("verlinde", true, 0.0, "skipped: S undefined");
    return r;
  }
  const int n = md.size();
  const CMatrix& S = md.S;
  const double unit_s = max_abs(S * S.adjoint() - CMatrix::Identity(n, n));
  if (unit_s > 1e-9) {
    r.add("verlinde", true, 0.0, "skipped: S not unitary");
    return r;
  }
  double worst = 0.0;
  std::vector<int> at;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::complex<double> s = 0;
        for (int v = 0; v < n; ++v) s += S(a, v) * S(b, v) * std::conj(S(c, v)) / S(0, v);
        const double res = std::abs(s - static_cast<double>(md.fusion.N(a, b, c)));
        if (res > worst) {
          worst = res;
          at = {a, b, c};
        }
      }
  std::ostringstream os;
  if (!at.empty()) os << "worst at (" << at[0] << "," << at[1] << "," << at[2] << ")";
  r.add("verlinde", worst < tol, worst, os.str());
  return r;
}

std::vector<int> degenerate_sectors(const CMatrix& Y, const std::vector<double>& d, double w,
                                    double tol) {
  const int n = static_cast<int>(Y.rows());
  std::vector<int> out;
  for (int a = 0; a < n; ++a) {
    std::complex<double> s = 0;
    for (int b = 0; b < n; ++b) s += Y(a, b) * Y(b, 0);
    const bool deg = std::abs(s - w * d[a]) < tol;
    const bool nondeg = std::abs(s) < tol;
    if (deg) {
      out.push_back(a);
    } else if (!nondeg) {
      std::ostringstream os;
      os << "row " << a << " sums to " << s << ", neither w*d = " << w * d[a] << " nor 0";
      throw DichotomyViolation(os.str());
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << c.residual;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os;
}

}  // namespace modkit
