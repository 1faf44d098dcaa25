#pragma once

#include <string>
#include <vector>

#include "modkit/catalog.hpp"
#include "modkit/fusion.hpp"
#include "modkit/matrix.hpp"
#include "modkit/modular.hpp"
#include "modkit/report.hpp"

namespace modkit {

/// Non-negative integer representation G_0..G_k of the SU(2)_k fusion rules on a graph.
struct Nimrep {
  Graph graph;
  int level = 0;
  std::vector<IMatrix> G;
};

struct NimrepBuild {
  bool ok = false;
  Nimrep nimrep;
  // first offending index and cell when !ok; cell is (-1, -1) for a closure failure
  int failed_at = -1;
  int row = -1;
  int col = -1;
  std::string reason;
};

/// G_0 = I, G_1 = adjacency, G_{j+1} = G_1 G_j - G_{j-1}; succeeds iff every G_j
/// (j <= k) is non-negative and G_1 G_k - G_{k-1} = 0.
NimrepBuild build_nimrep_su2(const Graph& graph, int level);

/// Exact checks: G_0 = I, non-negativity, G_a G_b = sum_c N^c_{ab} G_c, G_{conj a} = G_a^T.
Report verify_nimrep(const std::vector<IMatrix>& G, const FusionSystem& f);

/// Compares eig(G_a) with {S_{a,m}/S_{0,m} repeated Z_{m,m} times} for every a.
Report spectrum_check(const std::vector<IMatrix>& G, const IMatrix& Z, const ModularData& md,
                      double tol = 1e-7);

/// G_k is a permutation matrix of order <= 2 commuting with the adjacency.
bool simple_current_is_graph_symmetry(const Nimrep& n);

/// Largest adjacency eigenvalue.
double graph_norm(const IMatrix& adjacency);

}  // namespace modkit
