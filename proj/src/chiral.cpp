#include "modkit/chiral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace modkit {

GlobalIndices global_indices(const IMatrix& Z, const std::vector<double>& d) {
  const int n = static_cast<int>(Z.rows());
  GlobalIndices g;
  for (double x : d) g.w += x * x;
  for (int a = 0; a < n; ++a) {
    g.vacuum_column_sum += d[a] * static_cast<double>(Z(a, 0));
    g.vacuum_row_sum += d[a] * static_cast<double>(Z(0, a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.dzd += d[a] * static_cast<double>(Z(a, b)) * d[b];
  g.w_plus = g.w / g.vacuum_column_sum;
  g.w_minus = g.w / g.vacuum_row_sum;
  g.w_alpha = g.w * g.w / g.dzd;
  g.w_zero = g.w_plus * g.w_minus / g.w_alpha;
  return g;
}

namespace {

bool omega_invariant(const ModularData& md, const IMatrix& Z) {
  for (int a = 0; a < Z.rows(); ++a)
    for (int b = 0; b < Z.cols(); ++b)
      if (Z(a, b) != 0 && !md.same_twist(a, b)) return false;
  return true;
}

}  // namespace

ChiralNorms chiral_norm_check(const ModularData& md, const IMatrix& Z, double tol) {
  if (!omega_invariant(md, Z)) throw PreconditionError("Z does not commute with Omega");
  const int n = md.size();
  const auto& d = md.dims();
  const CMatrix& Y = md.Y;
  ChiralNorms out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.norm_plus += Y(0, a) * Y(a, b) * static_cast<double>(Z(b, 0));
      out.norm_minus += Y(0, a) * Y(a, b) * static_cast<double>(Z(0, b));
      out.inner += d[a] * std::conj(md.omega(a)) * md.omega(b) * static_cast<double>(Z(a, b)) * d[b];
      out.dzd += d[a] * static_cast<double>(Z(a, b)) * d[b];
    }
  const auto deg = degenerate_sectors(Y, d, md.w());
  for (int a : deg) out.degenerate_sum += d[a] * static_cast<double>(Z(a, 0));
  out.degenerate_sum *= md.w();
  const double ra = std::abs(out.norm_plus - out.degenerate_sum);
  const double rb = std::abs(out.norm_minus - out.degenerate_sum);
  const double rc = std::abs(out.inner - out.dzd);
  out.report.add("|u+|^2 = w sum_deg d Z_{a,0}", ra < tol, ra);
  out.report.add("|u-|^2 = w sum_deg d Z_{a,0}", rb < tol, rb);
  out.report.add("<u+,u-> = sum d Z d", rc < tol, rc);
  return out;
}

CommutantCheck commutant_check(const ModularData& md, const IMatrix& Z) {
  CommutantCheck c;
  const CMatrix zc = Z.cast<std::complex<double>>();
  c.y_residual = max_abs(md.Y * zc - zc * md.Y);
  const CMatrix om = md.omega.asDiagonal();
  c.omega_residual = max_abs(om * zc - zc * om);
  const auto& d = md.dims();
  for (int a : degenerate_sectors(md.Y, d, md.w()))
    c.degenerate_vacuum_sum += d[a] * static_cast<double>(Z(a, 0));
  const auto g = global_indices(Z, d);
  c.index_ratio = g.w / g.w_alpha;
  c.condition_holds = c.degenerate_vacuum_sum <= c.index_ratio + 1e-9;
  return c;
}

LrCounting lr_counting(const IMatrix& Z, const std::vector<double>& d) {
  LrCounting l;
  const int n = static_cast<int>(Z.rows());
  for (double x : d) l.w += x * x;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) l.dzd += d[a] * static_cast<double>(Z(a, b)) * d[b];
  l.v0 = l.dzd * l.dzd;
  l.w_delta = std::pow(l.w, 4) / l.v0;
  l.w_delta_is_w_squared = std::abs(l.w_delta - l.w * l.w) <= 1e-8 * l.w * l.w;
  l.sum_squares = Z.cwiseProduct(Z).sum();
  l.xi_sum_squares = l.sum_squares * l.sum_squares;
  return l;
}

std::vector<int> subsystem_degenerate_sectors(const ModularData& md, const std::vector<int>& gamma,
                                              double tol) {
  const auto& d = md.dims();
  double wg = 0;
  for (int g : gamma) wg += d[g] * d[g];
  std::vector<int> out;
  for (int a : gamma) {
    std::complex<double> s = 0;
    for (int b : gamma) s += md.Y(a, b) * md.Y(b, 0);
    if (std::abs(s - wg * d[a]) < tol) {
      out.push_back(a);
    } else if (std::abs(s) >= tol) {
      throw DichotomyViolation("subsystem row " + std::to_string(a) + " is neither degenerate nor orthogonal");
    }
  }
  return out;
}

DegenerateInvariant degenerate_invariant(const ModularData& md, const std::vector<int>& gamma_in,
                                         const std::vector<int>& theta_in, double tol) {
  const int n = md.size();
  const auto& f = md.fusion;
  const auto& d = md.dims();
  std::vector<bool> in_gamma(n, false);
  std::vector<bool> in_theta(n, false);
  for (int g : gamma_in) {
    if (g < 0 || g >= n) throw PreconditionError("Gamma label out of range");
    in_gamma[g] = true;
  }
  for (int t : theta_in) {
    if (t < 0 || t >= n) throw PreconditionError("Theta label out of range");
    in_theta[t] = true;
  }
  std::vector<int> gamma, theta;
  for (int a = 0; a < n; ++a) {
    if (in_gamma[a]) gamma.push_back(a);
    if (in_theta[a]) theta.push_back(a);
  }

  if (!in_gamma[0]) throw PreconditionError("Gamma must contain 0");
  for (int a : gamma) {
    if (!in_gamma[f.conj(a)]) throw PreconditionError("Gamma not closed under conjugation");
    for (int b : gamma)
      for (int c = 0; c < n; ++c)
        if (f.N(a, b, c) != 0 && !in_gamma[c]) throw PreconditionError("Gamma not closed under fusion");
  }
  for (int t : theta)
    if (!in_gamma[t]) throw PreconditionError("Theta must lie in Gamma");
  if (subsystem_degenerate_sectors(md, gamma, tol) != theta)
    throw PreconditionError("Theta is not the degenerate subsystem of Gamma");
  for (int t : theta) {
    if (!(md.twists[t] == Twist())) throw PreconditionError("Theta is not purely bosonic");
    if (std::abs(d[t] - std::round(d[t])) > 1e-9) throw PreconditionError("non-integer dimension in Theta");
  }

  // assumption: rows outside Gamma are orthogonal to the vacuum row on Gamma
  double closure = 0;
  for (int a = 0; a < n; ++a) {
    if (in_gamma[a]) continue;
    std::complex<double> s = 0;
    for (int g : gamma) s += std::conj(md.Y(a, g)) * md.Y(0, g);
    closure = std::max(closure, std::abs(s));
  }
  if (closure >= tol) {
    std::ostringstream os;
    os << "Gamma not Y-closed (residual " << closure << ")";
    throw NotYClosed(os.str());
  }

  DegenerateInvariant out;
  out.Z = IMatrix::Zero(n, n);
  for (int a : gamma)
    for (int b : gamma) {
      std::int64_t s = 0;
      for (int t : theta) s += f.N(f.conj(a), b, t) * std::llround(d[t]);
      out.Z(a, b) = s;
    }

  double wg = 0;
  for (int g : gamma) wg += d[g] * d[g];
  double cross = 0;
  for (int a : gamma)
    for (int b : gamma) {
      std::complex<double> s = 0;
      for (int g : gamma) s += std::conj(md.Y(a, g)) * md.Y(b, g);
      cross = std::max(cross, std::abs(s / wg - static_cast<double>(out.Z(a, b))));
    }
  auto& r = out.report;
  r.add("Y-closure", true, closure);
  r.add("integer formula = Gram form", cross < tol, cross);
  r.add("Z_00 = 1", out.Z(0, 0) == 1);
  r.add("Omega Z = Z Omega (exact)", omega_invariant(md, out.Z));
  const CMatrix zc = out.Z.cast<std::complex<double>>();
  const double yres = max_abs(md.Y * zc - zc * md.Y);
  r.add("YZ = ZY", yres < tol, yres);
  return out;
}

Report verify_extension(const ModularData& md, const CMatrix& s_ext, const CMatrix& t_ext,
                        const IMatrix& b_plus, const IMatrix& b_minus, const IMatrix& Z,
                        double tol) {
  Report r;
  if (!md.normalizable) {
    r.add("normalization", false, 0.0, "S undefined");
    return r;
  }
  const CMatrix bp = b_plus.cast<std::complex<double>>();
  const CMatrix bm = b_minus.cast<std::complex<double>>();
  if (s_ext.rows() != bp.rows() || t_ext.rows() != bp.rows() || bp.rows() != bm.rows() ||
      bp.cols() != md.size() || bm.cols() != md.size()) {
    r.add("shapes", false, 0.0, "extension data does not match the system");
    return r;
  }
  const double sp = max_abs(s_ext * bp - bp * md.S);
  const double sm = max_abs(s_ext * bm - bm * md.S);
  const double tp = max_abs(t_ext * bp - bp * md.T);
  const double tm = max_abs(t_ext * bm - bm * md.T);
  r.add("S_ext b+ = b+ S", sp < tol, sp);
  r.add("S_ext b- = b- S", sm < tol, sm);
  r.add("T_ext b+ = b+ T", tp < tol, tp);
  r.add("T_ext b- = b- T", tm < tol, tm);
  r.add("Z = b+^T b-", b_plus.transpose() * b_minus == Z);
  return r;
}

CatalogSystem product_system(const CatalogSystem& a, const CatalogSystem& b) {
  return {a.id + "x" + b.id, tensor_product(a.fusion, b.fusion), tensor_twists(a.twists, b.twists)};
}

}  // namespace modkit
