#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modkit/catalog.hpp"
#include "modkit/report.hpp"

namespace modkit {

/// Integer polynomial, coefficient i multiplies q^i.
using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_shift(const Poly& a, int k);  // q^k a
Poly poly_trim(Poly a);                 // drop trailing zeros
std::string poly_str(const Poly& p);

/// Multiplicities n_j^g of each affine vertex g in the restricted SU(2) irrep D_j, 0 <= j <= J.
struct KostantSeries {
  Graph graph;
  int truncation = 0;
  std::vector<std::vector<std::int64_t>> n;  // n[j][g]

  Poly series(int vertex) const;
};

/// n_{j+1} = A n_j - n_{j-1}, n_{-1} = 0, n_0 = delta_*. Throws PreconditionError
/// on a negative coefficient (the graph is not a McKay graph).
KostantSeries mckay_series(const Graph& affine, int truncation);

inline int default_truncation(int coxeter) { return 3 * coxeter + 4; }

/// Integer Perron-Frobenius vector of an affine graph normalised to 1 at "*".
std::vector<std::int64_t> affine_marks(const Graph& affine);

struct KostantPolynomial {
  int vertex = 0;
  Poly p;
};

struct KostantExtraction {
  bool ok = false;
  int r = 0;
  int s = 0;
  std::vector<KostantPolynomial> polys;  // one per affine vertex
  bool shape_ok = false;                 // p_g = sum_{i=0}^{h-2} c_i q^{i+1} for g != *
  std::string failure;
};

/// p_g = f_g (1 - q^r)(1 - q^s), certified on degrees (h, J].
KostantExtraction kostant_poly(const KostantSeries& series, int r, int s, int h);

struct RsSearch {
  int r = 0;
  int s = 0;
  std::vector<std::pair<int, int>> certified;  // every succeeding pair
  bool product_is_group_order = false;
  bool product_is_twice_group_order = false;
  KostantExtraction extraction;
};

/// Tries every r <= s with r + s = h + 2. Throws PreconditionError when none succeeds.
RsSearch find_rs(const KostantSeries& series, int h, int group_order);

/// Compares the Kostant polynomials with nimrep entries (G_j)_{iota, g} on the
/// ordinary graph at level h - 2 and checks the polynomial identity satisfied by
/// p_g with Omega(q) = (1 + q^2) p_* - q p_iota.
Report nimrep_match(const Graph& ordinary, const KostantSeries& series, const RsSearch& rs);

}  // namespace modkit
