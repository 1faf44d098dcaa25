#include "modkit/fusion.hpp"

#include <cmath>
#include <sstream>

#include "modkit/errors.hpp"

namespace modkit {

IMatrix FusionTensor::matrix(int a) const {
  IMatrix m(n_, n_);
  for (int b = 0; b < n_; ++b)
    for (int c = 0; c < n_; ++c) m(b, c) = (*this)(a, b, c);
  return m;
}

std::vector<AxiomViolation> verify_fusion_axioms(const FusionRules& rules,
                                                 const std::vector<double>* dims) {
  std::vector<AxiomViolation> out;
  const int n = rules.size();
  const auto& N = rules.fusion;
  const auto& bar = rules.conjugation;
  if (N.size() != n || static_cast<int>(bar.size()) != n) {
    out.push_back({"shape", {n, N.size(), static_cast<int>(bar.size())}});
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (bar[a] < 0 || bar[a] >= n || bar[bar[a]] != a) out.push_back({"conjugation-involution", {a}});
  }
  if (!out.empty()) return out;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N(a, b, c) < 0) out.push_back({"non-negativity", {a, b, c}});

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int delta = a == c ? 1 : 0;
      if (N(0, a, c) != delta) out.push_back({"unit-left", {a, c}});
      if (N(a, 0, c) != delta) out.push_back({"unit-right", {a, c}});
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (N(a, b, 0) != (b == bar[a] ? 1 : 0)) out.push_back({"conjugation", {a, b}});
      for (int c = 0; c < n; ++c) {
        if (N(a, b, c) != N(bar[a], c, b) || N(a, b, c) != N(c, bar[b], a))
          out.push_back({"frobenius-reciprocity", {a, b, c}});
      }
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < n; ++f) {
          long lhs = 0;
          long rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += static_cast<long>(N(a, b, e)) * N(e, c, f);
            rhs += static_cast<long>(N(b, c, e)) * N(a, e, f);
          }
          if (lhs != rhs) out.push_back({"associativity", {a, b, c, f}});
        }

  if (dims != nullptr) {
    const auto& d = *dims;
    if (std::abs(d[0] - 1.0) > 1e-9) out.push_back({"dimension-unit", {0}});
    for (int a = 0; a < n; ++a) {
      if (std::abs(d[a] - d[bar[a]]) > 1e-9) out.push_back({"dimension-conjugation", {a}});
      for (int b = 0; b < n; ++b) {
        double s = 0;
        for (int c = 0; c < n; ++c) s += N(a, b, c) * d[c];
        if (std::abs(s - d[a] * d[b]) > 1e-9) out.push_back({"dimension-homomorphism", {a, b}});
      }
    }
  }
  return out;
}

namespace {

bool strongly_connected(const IMatrix& m) {
  const int n = static_cast<int>(m.rows());
  auto reach = [&](bool transpose) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        const auto e = transpose ? m(u, v) : m(v, u);
        if (e != 0 && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return n == 0 || (reach(false) && reach(true));
}

}  // namespace

template <typename Real>
std::vector<Real> perron_frobenius_dimensions(const FusionRules& rules) {
  const int n = rules.size();
  if (n == 0) throw DegenerateInput("empty fusion system");
  IMatrix total = IMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) total += rules.fusion.matrix(a);
  if (!strongly_connected(total)) throw DegenerateInput("fusion graph is reducible");

  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  // shift by the identity so that a periodic graph still has a strictly dominant eigenvalue
  const Mat m = total.cast<Real>() + Mat::Identity(n, n);
  Vec v = Vec::Ones(n);
  v /= v.norm();
  Real rayleigh = 0;
  bool converged = false;
  for (int it = 0; it < 100000; ++it) {
    Vec next = m * v;
    const Real r = v.dot(next);
    next /= next.norm();
    const Real change = std::abs(r - rayleigh);
    v = next;
    rayleigh = r;
    if (it > 0 && change < Real(1e-13) * std::max(Real(1), std::abs(r))) {
      converged = true;
      break;
    }
  }
  if (!converged) throw DegenerateInput("Perron-Frobenius iteration did not converge");
  // a few extra sweeps push the vector well below the eigenvalue tolerance
  for (int it = 0; it < 200; ++it) {
    Vec next = m * v;
    v = next / next.norm();
  }
  if (v(0) <= 0) throw DegenerateInput("Perron-Frobenius vector has non-positive vacuum entry");
  std::vector<Real> d(n);
  for (int a = 0; a < n; ++a) d[a] = v(a) / v(0);
  for (int a = 0; a < n; ++a)
    if (!(d[a] > 0)) throw DegenerateInput("Perron-Frobenius vector not strictly positive");
  return d;
}

template std::vector<double> perron_frobenius_dimensions<double>(const FusionRules&);
template std::vector<long double> perron_frobenius_dimensions<long double>(const FusionRules&);

FusionSystem::FusionSystem(FusionRules rules) : rules_(std::move(rules)) {
  d_ = quantum_dimensions(rules_);
  for (double x : d_) w_ += x * x;
}

IMatrix FusionSystem::conjugation_matrix() const {
  const int n = size();
  IMatrix c = IMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) c(a, conj(a)) = 1;
  return c;
}

FusionSystem tensor_product(const FusionSystem& a, const FusionSystem& b) {
  const int na = a.size();
  const int nb = b.size();
  FusionRules r;
  r.fusion = FusionTensor(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      r.labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
      r.conjugation.push_back(a.conj(i) * nb + b.conj(j));
    }
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          for (int a3 = 0; a3 < na; ++a3)
            for (int b3 = 0; b3 < nb; ++b3)
              r.fusion(a1 * nb + b1, a2 * nb + b2, a3 * nb + b3) = a.N(a1, a2, a3) * b.N(b1, b2, b3);
  return FusionSystem(std::move(r));
}

Twists tensor_twists(const Twists& a, const Twists& b) {
  Twists out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  return out;
}

}  // namespace modkit
