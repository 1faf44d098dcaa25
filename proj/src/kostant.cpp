#include "modkit/kostant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modkit/errors.hpp"
#include "modkit/nimrep.hpp"

namespace modkit {

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(out);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly neg(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
  return poly_add(a, neg);
}

Poly poly_shift(const Poly& a, int k) {
  if (a.empty()) return {};
  Poly out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

std::string poly_str(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const std::int64_t mag = p[i] < 0 ? -p[i] : p[i];
    if (first) {
      if (p[i] < 0) os << "-";
    } else {
      os << (p[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << (mag != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

Poly KostantSeries::series(int vertex) const {
  Poly out;
  for (const auto& row : n) out.push_back(row[vertex]);
  return out;
}

KostantSeries mckay_series(const Graph& affine, int truncation) {
  if (!affine.affine || affine.star < 0) throw PreconditionError("mckay_series needs an affine graph");
  if (truncation < 1) throw PreconditionError("truncation must be >= 1");
  {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(affine.adjacency.cast<double>(), Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (std::abs(top - 2.0) > 1e-9) {
      std::ostringstream os;
      os << "graph is not a McKay graph: largest eigenvalue " << top << ", expected 2";
      throw PreconditionError(os.str());
    }
  }
  const int v = affine.size();
  KostantSeries ks;
  ks.graph = affine;
  ks.truncation = truncation;
  IVector prev = IVector::Zero(v);
  IVector cur = IVector::Zero(v);
  cur(affine.star) = 1;
  for (int j = 0; j <= truncation; ++j) {
    for (int g = 0; g < v; ++g)
      if (cur(g) < 0) {
        std::ostringstream os;
        os << "graph is not a McKay graph: n_" << j << " negative at vertex " << g;
        throw PreconditionError(os.str());
      }
    ks.n.emplace_back(cur.data(), cur.data() + v);
    IVector next = affine.adjacency * cur - prev;
    prev = cur;
    cur = next;
  }
  return ks;
}

std::vector<std::int64_t> affine_marks(const Graph& affine) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(affine.adjacency.cast<double>());
  Eigen::Index top;
  es.eigenvalues().maxCoeff(&top);
  RVector v = es.eigenvectors().col(top);
  v /= v(affine.star);
  std::vector<std::int64_t> marks;
  for (Eigen::Index i = 0; i < v.size(); ++i) marks.push_back(std::llround(v(i)));
  // exact check: A m = 2 m
  IVector m = Eigen::Map<IVector>(marks.data(), static_cast<Eigen::Index>(marks.size()));
  if (affine.adjacency * m != 2 * m) throw Error("affine marks are not an integer null vector of A - 2");
  return marks;
}

KostantExtraction kostant_poly(const KostantSeries& series, int r, int s, int h) {
  const int J = series.truncation;
  if (J < 2 * h + r + s) throw PreconditionError("truncation too short to certify (r, s)");
  KostantExtraction out;
  out.r = r;
  out.s = s;
  Poly denom(static_cast<std::size_t>(r + s + 1), 0);
  denom[0] += 1;
  denom[r] -= 1;
  denom[s] -= 1;
  denom[r + s] += 1;
  const int star = series.graph.star;
  out.shape_ok = true;
  std::ostringstream why;
  for (int g = 0; g < series.graph.size(); ++g) {
    Poly f = series.series(g);
    Poly prod = poly_mul(f, denom);
    prod.resize(static_cast<std::size_t>(J) + 1, 0);  // exact only up to degree J
    for (int deg = h + 1; deg <= J; ++deg)
      if (prod[deg] != 0 && why.str().empty())
        why << "vertex " << g << ": nonzero coefficient at degree " << deg;
    prod.resize(static_cast<std::size_t>(h) + 1);
    for (auto c : prod)
      if (c < 0 && why.str().empty()) why << "vertex " << g << ": negative coefficient";
    prod = poly_trim(prod);
    if (g == star) {
      Poly expect(static_cast<std::size_t>(h) + 1, 0);
      expect[0] = 1;
      expect[h] = 1;
      if (prod != expect && why.str().empty()) why << "p_* != 1 + q^h";
    } else if (!prod.empty() && (prod[0] != 0 || static_cast<int>(prod.size()) > h)) {
      out.shape_ok = false;
    }
    out.polys.push_back({g, prod});
  }
  out.failure = why.str();
  out.ok = out.failure.empty();
  return out;
}

RsSearch find_rs(const KostantSeries& series, int h, int group_order) {
  RsSearch out;
  for (int r = 1; 2 * r <= h + 2; ++r) {
    const int s = h + 2 - r;
    auto ex = kostant_poly(series, r, s, h);
    if (!ex.ok) continue;
    out.certified.emplace_back(r, s);
    if (out.certified.size() == 1) {
      out.r = r;
      out.s = s;
      out.extraction = std::move(ex);
    }
  }
  if (out.certified.empty()) throw PreconditionError("no (r, s) with r + s = h + 2 certifies");
  out.product_is_group_order = out.r * out.s == group_order;
  out.product_is_twice_group_order = out.r * out.s == 2 * group_order;
  return out;
}

Report nimrep_match(const Graph& ordinary, const KostantSeries& series, const RsSearch& rs) {
  Report rep;
  const GraphMeta meta = graph_meta(ordinary.name);
  const int k = meta.coxeter - 2;
  const int iota = ordinary.iota;
  const int star = series.graph.star;
  const int nv = ordinary.size();
  auto built = build_nimrep_su2(ordinary, k);
  if (!built.ok) {
    rep.add("nimrep build", false, 0.0, built.reason);
    return rep;
  }
  const auto& G = built.nimrep.G;

  std::vector<Poly> nim(nv + 1);
  for (int g = 0; g < nv; ++g) {
    Poly p(static_cast<std::size_t>(k) + 2, 0);
    for (int j = 0; j <= k; ++j) p[j + 1] = G[j](iota, g);
    nim[g] = poly_trim(p);
  }
  Poly pstar(static_cast<std::size_t>(k) + 3, 0);
  pstar[0] = 1;
  pstar[k + 2] = 1;
  nim[star] = pstar;

  rep.add("<theta, lambda_k> = 1", G[k](iota, iota) == 1, 0.0,
          "value " + std::to_string(G[k](iota, iota)));

  for (int g = 0; g < nv; ++g) {
    const Poly& kp = rs.extraction.polys[g].p;
    const bool same = kp == nim[g];
    rep.add("vertex " + std::to_string(g), same, 0.0,
            same ? poly_str(kp) : "kostant " + poly_str(kp) + " vs nimrep " + poly_str(nim[g]));
  }

  // q sum_g' A_{g,g'} p_g' = (1 + q^2) p_g - delta_{g,*} Omega
  const Poly omega = poly_sub(poly_mul({1, 0, 1}, pstar), poly_shift(nim[iota], 1));
  bool identity = true;
  std::string where;
  for (int g = 0; g <= nv; ++g) {
    Poly lhs;
    for (int h2 = 0; h2 <= nv; ++h2) {
      const auto a = series.graph.adjacency(g, h2);
      if (a != 0) lhs = poly_add(lhs, poly_mul({a}, nim[h2]));
    }
    lhs = poly_shift(lhs, 1);
    Poly rhs = poly_mul({1, 0, 1}, nim[g]);
    if (g == star) rhs = poly_sub(rhs, omega);
    if (poly_trim(lhs) != poly_trim(rhs)) {
      identity = false;
      if (where.empty()) where = "fails at vertex " + std::to_string(g);
    }
  }
  rep.add("polynomial identity", identity, 0.0, where);

  Poly denom(static_cast<std::size_t>(rs.r + rs.s + 1), 0);
  denom[0] += 1;
  denom[rs.r] -= 1;
  denom[rs.s] -= 1;
  denom[rs.r + rs.s] += 1;
  const bool omega_ok = poly_trim(omega) == poly_trim(denom);
  rep.add("Omega = (1-q^r)(1-q^s)", omega_ok, 0.0, "Omega = " + poly_str(omega));
  return rep;
}

}  // namespace modkit
