#include "modkit/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "modkit/errors.hpp"

namespace modkit {

CatalogSystem gen_su2(int k) {
  if (k < 1) throw PreconditionError("SU(2) level must be >= 1");
  const int n = k + 1;
  std::vector<IMatrix> mats;
  IMatrix adj = IMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) adj(i, i + 1) = adj(i + 1, i) = 1;
  mats.push_back(IMatrix::Identity(n, n));
  mats.push_back(adj);
  for (int j = 1; j + 1 < n; ++j) mats.push_back(adj * mats[j] - mats[j - 1]);

  FusionRules r;
  r.fusion = FusionTensor(n);
  for (int j = 0; j < n; ++j) {
    r.labels.push_back(std::to_string(j));
    r.conjugation.push_back(j);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r.fusion(j, a, b) = static_cast<int>(mats[j](a, b));
  }
  Twists t;
  for (int j = 0; j < n; ++j) t.emplace_back(j * (j + 2), 4 * (k + 2));
  return {"su2_" + std::to_string(k), FusionSystem(std::move(r)), std::move(t)};
}

Twists quadratic_twists(int n) {
  Twists t;
  for (int a = 0; a < n; ++a) t.emplace_back(a * a, n % 2 == 1 ? n : 2 * n);
  return t;
}

CatalogSystem gen_cyclic(int n, const Twists& twists) {
  if (n < 1) throw PreconditionError("cyclic order must be >= 1");
  if (static_cast<int>(twists.size()) != n) throw PreconditionError("need one twist per element");
  if (!(twists[0] == Twist())) throw PreconditionError("t_0 must be 0");
  FusionRules r;
  r.fusion = FusionTensor(n);
  for (int a = 0; a < n; ++a) {
    r.labels.push_back(std::to_string(a));
    r.conjugation.push_back((n - a) % n);
    for (int b = 0; b < n; ++b) r.fusion(a, b, (a + b) % n) = 1;
  }
  return {"cyclic_" + std::to_string(n), FusionSystem(std::move(r)), twists};
}

int Graph::edges() const {
  std::int64_t e = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) e += adjacency(i, j);
  return static_cast<int>(e);
}

namespace {

std::pair<char, int> parse_name(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2) throw PreconditionError("unknown graph name: " + raw);
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw PreconditionError("unknown graph name: " + raw);
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw PreconditionError("graph rank too large: " + raw);
  }
  const bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
                  (family == 'E' && rank >= 6 && rank <= 8);
  if (!ok) throw PreconditionError("unknown graph name: " + raw);
  return {family, rank};
}

void link(IMatrix& m, int a, int b) {
  m(a, b) += 1;
  m(b, a) += 1;
}

}  // namespace

Graph ade_graph(const std::string& name) {
  auto [family, rank] = parse_name(name);
  Graph g;
  g.family = family;
  g.rank = rank;
  g.name = std::string(1, family) + std::to_string(rank);
  g.adjacency = IMatrix::Zero(rank, rank);
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(g.adjacency, i, i + 1);
      g.iota = 0;
      break;
    case 'D':
      // path 0..rank-2, short leg rank-1 on vertex rank-3
      for (int i = 0; i + 2 < rank; ++i) link(g.adjacency, i, i + 1);
      link(g.adjacency, rank - 3, rank - 1);
      g.iota = 1;
      break;
    default:
      // path 0..rank-2 with the short leg on vertex 2
      for (int i = 0; i + 2 < rank; ++i) link(g.adjacency, i, i + 1);
      link(g.adjacency, 2, rank - 1);
      g.iota = rank == 6 ? 5 : rank == 7 ? 0 : 6;
      break;
  }
  return g;
}

Graph affine_ade(const std::string& name) {
  Graph base = ade_graph(name);
  const int n = base.size();
  Graph g = base;
  g.affine = true;
  g.name = base.name + "^";
  g.adjacency = IMatrix::Zero(n + 1, n + 1);
  g.adjacency.topLeftCorner(n, n) = base.adjacency;
  g.star = n;
  link(g.adjacency, n, base.iota);
  if (base.family == 'A') link(g.adjacency, n, n - 1);  // closes the cycle; doubles the bond for A1
  return g;
}

GraphMeta graph_meta(const std::string& name) {
  auto [family, rank] = parse_name(name);
  GraphMeta m;
  switch (family) {
    case 'A':
      m.coxeter = rank + 1;
      for (int e = 1; e <= rank; ++e) m.exponents.push_back(e);
      m.group_order = rank + 1;
      break;
    case 'D':
      m.coxeter = 2 * rank - 2;
      for (int e = 1; e <= 2 * rank - 3; e += 2) m.exponents.push_back(e);
      m.exponents.push_back(rank - 1);
      m.group_order = 4 * rank - 8;
      break;
    default:
      if (rank == 6) {
        m.coxeter = 12;
        m.exponents = {1, 4, 5, 7, 8, 11};
        m.group_order = 24;
      } else if (rank == 7) {
        m.coxeter = 18;
        m.exponents = {1, 5, 7, 9, 11, 13, 17};
        m.group_order = 48;
      } else {
        m.coxeter = 30;
        m.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
        m.group_order = 120;
      }
      break;
  }
  std::sort(m.exponents.begin(), m.exponents.end());
  m.level = m.coxeter - 2;
  return m;
}

std::vector<std::string> catalog_graph_names() {
  std::vector<std::string> out;
  for (int l = 1; l <= 8; ++l) out.push_back("A" + std::to_string(l));
  for (int l = 4; l <= 10; ++l) out.push_back("D" + std::to_string(l));
  out.insert(out.end(), {"E6", "E7", "E8"});
  return out;
}

}  // namespace modkit
