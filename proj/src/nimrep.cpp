#include "modkit/nimrep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modkit/errors.hpp"

namespace modkit {

NimrepBuild build_nimrep_su2(const Graph& graph, int level) {
  if (level < 0) throw PreconditionError("level must be non-negative");
  NimrepBuild out;
  out.nimrep.graph = graph;
  out.nimrep.level = level;
  const int n = graph.size();
  auto& G = out.nimrep.G;
  G.push_back(IMatrix::Identity(n, n));
  G.push_back(graph.adjacency);
  for (int j = 1; j < level; ++j) G.push_back(G[1] * G[j] - G[j - 1]);
  G.resize(level + 1);
  for (int j = 0; j <= level; ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (G[j](r, c) < 0) {
          out.failed_at = j;
          out.row = r;
          out.col = c;
          std::ostringstream os;
          os << "negative entry in G_" << j << " at (" << r << "," << c << ")";
          out.reason = os.str();
          return out;
        }
  const IMatrix closure =
      level == 0 ? IMatrix(graph.adjacency) : IMatrix(graph.adjacency * G[level] - G[level - 1]);
  if (!closure.isZero()) {
    out.failed_at = level + 1;
    for (int r = 0; r < n && out.row < 0; ++r)
      for (int c = 0; c < n; ++c)
        if (closure(r, c) != 0) {
          out.row = r;
          out.col = c;
          break;
        }
    std::ostringstream os;
    os << "closure G_1 G_" << level << " - G_" << level - 1 << " != 0 at (" << out.row << ","
       << out.col << ")";
    out.reason = os.str();
    return out;
  }
  out.ok = true;
  return out;
}

Report verify_nimrep(const std::vector<IMatrix>& G, const FusionSystem& f) {
  Report r;
  const int n = f.size();
  if (static_cast<int>(G.size()) != n) {
    r.add("family size", false, 0.0, "expected one matrix per label");
    return r;
  }
  const auto dim = G[0].rows();
  r.add("G_0 identity", G[0] == IMatrix::Identity(dim, dim));

  bool nonneg = true;
  for (const auto& g : G) nonneg = nonneg && (g.array() >= 0).all();
  r.add("non-negative", nonneg);

  std::string first;
  std::int64_t worst = 0;
  for (int a = 0; a < n && first.empty(); ++a)
    for (int b = 0; b < n; ++b) {
      IMatrix rhs = IMatrix::Zero(dim, dim);
      for (int c = 0; c < n; ++c)
        if (f.N(a, b, c) != 0) rhs += f.N(a, b, c) * G[c];
      const IMatrix diff = G[a] * G[b] - rhs;
      if (!diff.isZero()) {
        worst = diff.cwiseAbs().maxCoeff();
        first = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }
  r.add("fusion relation", first.empty(), static_cast<double>(worst),
        first.empty() ? "" : "fails at " + first);

  bool conj = true;
  for (int a = 0; a < n; ++a) conj = conj && G[f.conj(a)] == G[a].transpose();
  r.add("conjugation transpose", conj);
  return r;
}

Report spectrum_check(const std::vector<IMatrix>& G, const IMatrix& Z, const ModularData& md,
                      double tol) {
  Report r;
  const int n = md.size();
  const auto dim = G.empty() ? 0 : G[0].rows();
  if (dim != Z.trace()) {
    std::ostringstream os;
    os << "|V| = " << dim << " but tr Z = " << Z.trace();
    r.add("size", false, 0.0, os.str());
    return r;
  }
  if (static_cast<int>(G.size()) != n) {
    r.add("size", false, 0.0, "expected one matrix per label");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(G[a].cast<double>());
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    std::vector<double> want;
    for (int m = 0; m < n; ++m)
      for (std::int64_t rep = 0; rep < Z(m, m); ++rep)
        want.push_back((md.S(a, m) / md.S(0, m)).real());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    r.add("spectrum G_" + std::to_string(a), worst < tol, worst);
  }
  return r;
}

bool simple_current_is_graph_symmetry(const Nimrep& n) {
  const IMatrix& g = n.G.back();
  const auto dim = g.rows();
  return is_permutation_matrix(g) && g * g == IMatrix::Identity(dim, dim) &&
         g.transpose() * g == IMatrix::Identity(dim, dim) &&
         g * n.graph.adjacency == n.graph.adjacency * g;
}

double graph_norm(const IMatrix& adjacency) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(adjacency.cast<double>());
  return es.eigenvalues().maxCoeff();
}

}  // namespace modkit
