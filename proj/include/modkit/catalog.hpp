#pragma once

#include <string>
#include <vector>

#include "modkit/fusion.hpp"
#include "modkit/matrix.hpp"
#include "modkit/twist.hpp"

namespace modkit {

/// A generated fusion system with its twists and a short identifier.
struct CatalogSystem {
  std::string id;
  FusionSystem fusion;
  Twists twists;
};

/// SU(2) at level k: labels 0..k, Chebyshev fusion, t_j = j(j+2)/(4(k+2)).
CatalogSystem gen_su2(int k);

/// Z_n with addition mod n and conjugation a -> -a.
CatalogSystem gen_cyclic(int n, const Twists& twists);

/// t_a = a^2/n for odd n and a^2/(2n) for even n (a nondegenerate quadratic form).
Twists quadratic_twists(int n);

/// Dynkin graph. Vertex order: the longest path first, in path order, and the
/// remaining short-leg vertex (D and E) last. Affine graphs append "*" as the
/// final vertex.
struct Graph {
  std::string name;  // canonical, e.g. "E7"
  char family = 'A';
  int rank = 0;
  bool affine = false;
  IMatrix adjacency;
  int star = -1;  // affine only
  int iota = 0;   // ordinary vertex joined to "*"

  int size() const { return static_cast<int>(adjacency.rows()); }
  int edges() const;
};

struct GraphMeta {
  int coxeter = 0;
  std::vector<int> exponents;
  int group_order = 0;
  int level = 0;  // coxeter - 2
};

Graph ade_graph(const std::string& name);
Graph affine_ade(const std::string& name);
GraphMeta graph_meta(const std::string& name);

/// Names of the graphs the catalog knows at desk scale.
std::vector<std::string> catalog_graph_names();

}  // namespace modkit
