#include "modkit/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "modkit/errors.hpp"

namespace modkit {

IMatrix entry_bounds(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  IMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = static_cast<std::int64_t>(std::floor(d[i] * d[j] + 1e-9));
  return b;
}

bool lex_less(const IMatrix& a, const IMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

namespace {

struct Cell {
  int row;
  int col;
  std::int64_t lo;
  std::int64_t hi;
};

/// Free/pivot parameterisation of the S-commutant restricted to the T-filtered cells.
struct Commutant {
  std::vector<Cell> cells;
  std::vector<int> free_vars;     // indices into cells, in DFS order
  std::vector<int> dependents;    // pivot cells
  std::vector<double> dep_const;  // value with all free vars 0
  // coef[p][k]: contribution of free_vars[k] to dependents[p] (already negated)
  std::vector<std::vector<double>> coef;
};

constexpr double kPivotEps = 1e-9;

Commutant reduce(const ModularData& md, const IMatrix& bounds) {
  const int n = md.size();
  Commutant c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (md.same_twist(i, j) && bounds(i, j) > 0) {
        const bool vac = i == 0 && j == 0;
        c.cells.push_back({i, j, vac ? 1 : 0, vac ? 1 : bounds(i, j)});
      }
  const int m = static_cast<int>(c.cells.size());
  // large-range cells are eliminated first so that small-range cells stay free
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.cells[a].hi > c.cells[b].hi; });

  const CMatrix& S = md.S;
  const int rows = 2 * n * n + 1;
  RMatrix a = RMatrix::Zero(rows, m + 1);
  for (int v = 0; v < m; ++v) {
    const int i = c.cells[v].row;
    const int j = c.cells[v].col;
    // (SZ)_{x,j} gains S_{x,i}; (ZS)_{i,y} gains S_{j,y}
    for (int x = 0; x < n; ++x) {
      const int r = x * n + j;
      a(2 * r, v) += S(x, i).real();
      a(2 * r + 1, v) += S(x, i).imag();
    }
    for (int y = 0; y < n; ++y) {
      const int r = i * n + y;
      a(2 * r, v) -= S(j, y).real();
      a(2 * r + 1, v) -= S(j, y).imag();
    }
    if (i == 0 && j == 0) a(rows - 1, v) = 1.0;
  }
  a(rows - 1, m) = 1.0;

  std::vector<int> pivot_of_row;
  int prow = 0;
  std::vector<bool> is_pivot(m, false);
  for (int col : order) {
    if (prow == rows) break;
    Eigen::Index best;
    const double mag = a.col(col).segment(prow, rows - prow).cwiseAbs().maxCoeff(&best);
    if (mag < kPivotEps) continue;
    a.row(prow).swap(a.row(prow + best));
    a.row(prow) /= a(prow, col);
    for (int r = 0; r < rows; ++r) {
      if (r == prow) continue;
      const double f = a(r, col);
      if (f != 0.0) a.row(r) -= f * a.row(prow);
    }
    is_pivot[col] = true;
    pivot_of_row.push_back(col);
    ++prow;
  }
  for (int r = prow; r < rows; ++r)
    if (std::abs(a(r, m)) > 1e-6) throw Error("S-commutant system is inconsistent");

  for (int v : order)
    if (!is_pivot[v]) c.free_vars.push_back(v);
  // free variables touching many dependents first, then by range
  std::vector<int> touches(m, 0);
  for (int r = 0; r < prow; ++r)
    for (int f : c.free_vars)
      if (std::abs(a(r, f)) > kPivotEps) ++touches[f];
  std::stable_sort(c.free_vars.begin(), c.free_vars.end(), [&](int x, int y) {
    if (touches[x] != touches[y]) return touches[x] > touches[y];
    return c.cells[x].hi < c.cells[y].hi;
  });
  for (int r = 0; r < prow; ++r) {
    c.dependents.push_back(pivot_of_row[r]);
    c.dep_const.push_back(a(r, m));
    std::vector<double> row;
    for (int f : c.free_vars) {
      const double v = a(r, f);
      row.push_back(std::abs(v) > kPivotEps ? -v : 0.0);
    }
    c.coef.push_back(std::move(row));
  }
  return c;
}

class Search {
 public:
  Search(const ModularData& md, const Commutant& c, double gannon, const EnumOptions& opts,
         std::atomic<std::int64_t>& nodes)
      : md_(md), c_(c), gannon_(gannon), opts_(opts), nodes_(nodes) {
    const int nf = static_cast<int>(c_.free_vars.size());
    const int nd = static_cast<int>(c_.dependents.size());
    // the total entry sum is a further linear form in the free variables
    total_const_ = 0;
    total_coef_.assign(nf, 1.0);
    for (int p = 0; p < nd; ++p) {
      total_const_ += c_.dep_const[p];
      for (int k = 0; k < nf; ++k) total_coef_[k] += c_.coef[p][k];
    }
    suffix_lo_.assign(nd + 1, std::vector<double>(nf + 1, 0.0));
    suffix_hi_.assign(nd + 1, std::vector<double>(nf + 1, 0.0));
    for (int p = 0; p <= nd; ++p)
      for (int k = nf - 1; k >= 0; --k) {
        const double coef = p < nd ? c_.coef[p][k] : total_coef_[k];
        const Cell& cell = c_.cells[c_.free_vars[k]];
        const double x = coef * static_cast<double>(cell.lo);
        const double y = coef * static_cast<double>(cell.hi);
        suffix_lo_[p][k] = suffix_lo_[p][k + 1] + std::min(x, y);
        suffix_hi_[p][k] = suffix_hi_[p][k + 1] + std::max(x, y);
      }
    partial_.assign(nd + 1, 0.0);
    for (int p = 0; p < nd; ++p) partial_[p] = c_.dep_const[p];
    partial_[nd] = total_const_;
    values_.assign(nf, 0);
  }

  void run_from(int first_value, std::vector<IMatrix>& out) {
    if (c_.free_vars.empty()) {
      count_node();
      leaf(out);
      return;
    }
    assign(0, first_value);
    if (feasible(1)) descend(1, out);
    unassign(0, first_value);
  }

  void run(std::vector<IMatrix>& out) {
    if (c_.free_vars.empty()) {
      count_node();
      leaf(out);
      return;
    }
    descend(0, out);
  }

 private:
  void count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > opts_.budget)
      throw BudgetExceeded("enumeration budget exhausted");
  }

  void assign(int k, std::int64_t v) {
    values_[k] = v;
    const int nd = static_cast<int>(c_.dependents.size());
    for (int p = 0; p < nd; ++p) partial_[p] += c_.coef[p][k] * static_cast<double>(v);
    partial_[nd] += total_coef_[k] * static_cast<double>(v);
  }
  void unassign(int k, std::int64_t v) {
    const int nd = static_cast<int>(c_.dependents.size());
    for (int p = 0; p < nd; ++p) partial_[p] -= c_.coef[p][k] * static_cast<double>(v);
    partial_[nd] -= total_coef_[k] * static_cast<double>(v);
    values_[k] = 0;
  }

  /// Interval test on every dependent given free variables 0..k-1 fixed.
  bool feasible(int k) const {
    const double slack = 1e-6;
    const int nd = static_cast<int>(c_.dependents.size());
    for (int p = 0; p < nd; ++p) {
      const Cell& cell = c_.cells[c_.dependents[p]];
      const double lo = partial_[p] + suffix_lo_[p][k];
      const double hi = partial_[p] + suffix_hi_[p][k];
      if (hi < static_cast<double>(cell.lo) - slack || lo > static_cast<double>(cell.hi) + slack)
        return false;
      // once fully determined the value must be integral
      if (suffix_lo_[p][k] == suffix_hi_[p][k]) {
        const double v = partial_[p];
        if (std::abs(v - std::round(v)) > opts_.tolerance) return false;
      }
    }
    return partial_[nd] + suffix_lo_[nd][k] <= gannon_ + slack;
  }

  void descend(int k, std::vector<IMatrix>& out) {
    count_node();
    const int nf = static_cast<int>(c_.free_vars.size());
    if (k == nf) {
      leaf(out);
      return;
    }
    const Cell& cell = c_.cells[c_.free_vars[k]];
    for (std::int64_t v = cell.lo; v <= cell.hi; ++v) {
      assign(k, v);
      if (feasible(k + 1)) descend(k + 1, out);
      unassign(k, v);
    }
  }

  void leaf(std::vector<IMatrix>& out) {
    const int n = md_.size();
    IMatrix z = IMatrix::Zero(n, n);
    for (std::size_t k = 0; k < c_.free_vars.size(); ++k) {
      const Cell& cell = c_.cells[c_.free_vars[k]];
      z(cell.row, cell.col) = values_[k];
    }
    for (std::size_t p = 0; p < c_.dependents.size(); ++p) {
      const Cell& cell = c_.cells[c_.dependents[p]];
      const double v = partial_[p];
      const double r = std::round(v);
      if (std::abs(v - r) > opts_.tolerance) return;
      const auto iv = static_cast<std::int64_t>(r);
      if (iv < cell.lo || iv > cell.hi) return;
      z(cell.row, cell.col) = iv;
    }
    if (z(0, 0) != 1) return;
    if (static_cast<double>(z.sum()) > gannon_ + 1e-6) return;
    const CMatrix zc = z.cast<std::complex<double>>();
    if (max_abs(md_.S * zc - zc * md_.S) >= opts_.tolerance) return;
    out.push_back(std::move(z));
  }

  const ModularData& md_;
  const Commutant& c_;
  double gannon_;
  const EnumOptions& opts_;
  std::atomic<std::int64_t>& nodes_;
  double total_const_ = 0;
  std::vector<double> total_coef_;
  std::vector<std::vector<double>> suffix_lo_;
  std::vector<std::vector<double>> suffix_hi_;
  std::vector<double> partial_;
  std::vector<std::int64_t> values_;
};

bool verify_extended(const IMatrix& z, const LCMatrix& s, double tol) {
  const LCMatrix zl = z.cast<LComplex>();
  const LCMatrix diff = s * zl - zl * s;
  long double worst = 0;
  for (Eigen::Index i = 0; i < diff.size(); ++i) worst = std::max(worst, std::abs(diff(i)));
  return worst < tol;
}

}  // namespace

std::vector<IMatrix> enumerate_invariants(const ModularData& md, const EnumOptions& opts,
                                          EnumStats* stats) {
  if (!md.normalizable) throw PreconditionError("enumeration needs normalizable modular data");
  if (!verify_modular(md).ok()) throw PreconditionError("modular data fails verify_modular");
  const IMatrix bounds = entry_bounds(md.dims());
  const double s00 = md.S(0, 0).real();
  const double gannon = 1.0 / (s00 * s00);
  const Commutant c = reduce(md, bounds);

  std::atomic<std::int64_t> nodes{0};
  std::vector<IMatrix> found;
  int threads = opts.threads;
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || c.free_vars.empty()) {
    Search(md, c, gannon, opts, nodes).run(found);
  } else {
    // each value of the first free variable is an independent branch
    const Cell& first = c.cells[c.free_vars[0]];
    std::vector<std::future<std::vector<IMatrix>>> tasks;
    std::atomic<std::int64_t> next{first.lo};
    for (int t = 0; t < threads; ++t) {
      tasks.push_back(std::async(std::launch::async, [&] {
        std::vector<IMatrix> local;
        Search search(md, c, gannon, opts, nodes);
        for (std::int64_t v = next++; v <= first.hi; v = next++) search.run_from(static_cast<int>(v), local);
        return local;
      }));
    }
    for (auto& t : tasks) {
      auto part = t.get();
      found.insert(found.end(), part.begin(), part.end());
    }
  }

  const LCMatrix s_ext = extended_precision_S(md);
  std::vector<IMatrix> out;
  for (auto& z : found)
    if (verify_extended(z, s_ext, opts.verify_tolerance)) out.push_back(std::move(z));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) {
    stats->cells = static_cast<int>(c.cells.size());
    stats->free_parameters = static_cast<int>(c.free_vars.size());
    stats->nodes = nodes.load();
  }
  return out;
}

InvariantFlags classify(const IMatrix& Z, const ModularData& md) {
  InvariantFlags f;
  const int n = static_cast<int>(Z.rows());
  f.symmetric = Z == Z.transpose();
  f.permutation = is_permutation_matrix(Z);
  f.vacuum_symmetric = true;
  for (int a = 0; a < n; ++a)
    if (Z(a, 0) != Z(0, a)) f.vacuum_symmetric = false;
  f.conjugate = Z * md.fusion.conjugation_matrix();
  f.self_conjugate = f.conjugate == Z;
  return f;
}

namespace {

bool gram_search(IMatrix& r, std::vector<IVector>& rows) {
  const int n = static_cast<int>(r.rows());
  int i = 0;
  while (i < n && r(i, i) == 0) ++i;
  if (i == n) return r.isZero();
  // candidate row v with v_i >= 1, supported on indices >= i
  IVector v = IVector::Zero(n);
  std::vector<int> support;
  for (int j = i; j < n; ++j)
    if (r(j, j) > 0 && r(i, j) > 0) support.push_back(j);

  std::function<bool(std::size_t)> fill = [&](std::size_t pos) -> bool {
    if (pos == support.size()) {
      if (v(i) == 0) return false;
      IMatrix outer = v * v.transpose();
      r -= outer;
      rows.push_back(v);
      if (gram_search(r, rows)) return true;
      rows.pop_back();
      r += outer;
      return false;
    }
    const int j = support[pos];
    const std::int64_t lo = j == i ? 1 : 0;
    std::int64_t hi = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(r(j, j))) + 1e-9));
    for (std::int64_t x = hi; x >= lo; --x) {
      bool ok = x * x <= r(j, j);
      for (std::size_t q = 0; ok && q < pos; ++q) ok = v(support[q]) * x <= r(support[q], j);
      if (!ok) continue;
      v(j) = x;
      if (fill(pos + 1)) return true;
      v(j) = 0;
    }
    return false;
  };
  return fill(0);
}

}  // namespace

std::optional<IMatrix> type_I_factor(const IMatrix& Z) {
  const int n = static_cast<int>(Z.rows());
  if (n == 0 || Z != Z.transpose() || Z(0, 0) != 1) return std::nullopt;
  if ((Z.array() < 0).any()) return std::nullopt;
  IVector vac = Z.row(0).transpose();
  IMatrix r = Z - vac * vac.transpose();
  if ((r.array() < 0).any()) return std::nullopt;
  std::vector<IVector> rows;
  if (!gram_search(r, rows)) return std::nullopt;
  IMatrix b(static_cast<Eigen::Index>(rows.size()) + 1, n);
  b.row(0) = vac.transpose();
  for (std::size_t t = 0; t < rows.size(); ++t) b.row(static_cast<Eigen::Index>(t) + 1) = rows[t].transpose();
  return b;
}

std::optional<std::vector<int>> twist_factor(const IMatrix& Z, const IMatrix& b) {
  const int rows = static_cast<int>(b.rows());
  if (b.cols() != Z.rows() || Z.rows() != Z.cols()) return std::nullopt;
  std::vector<int> theta(rows, -1);
  std::vector<bool> used(rows, false);
  IMatrix partial = IMatrix::Zero(Z.rows(), Z.cols());
  std::function<bool(int)> go = [&](int t) -> bool {
    if (t == rows) return partial == Z;
    std::vector<int> tried;
    for (int s = 0; s < rows; ++s) {
      if (used[s]) continue;
      // identical rows give identical branches
      bool dup = false;
      for (int u : tried) dup = dup || b.row(u) == b.row(s);
      if (dup) continue;
      tried.push_back(s);
      IMatrix term = b.row(t).transpose() * b.row(s);
      partial += term;
      if (((Z - partial).array() >= 0).all()) {
        used[s] = true;
        theta[t] = s;
        if (go(t + 1)) return true;
        used[s] = false;
      }
      partial -= term;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return theta;
}

TraceCounts trace_counts(const IMatrix& Z, const IMatrix* b_plus, const IMatrix* b_minus) {
  TraceCounts t;
  t.trace = Z.trace();
  t.sum_squares = Z.cwiseProduct(Z).sum();
  if (b_plus) {
    t.chiral_trace_plus = (b_plus->transpose() * *b_plus).trace();
    t.chiral_dim_plus = b_plus->cwiseProduct(*b_plus).sum();
  }
  if (b_minus) {
    t.chiral_trace_minus = (b_minus->transpose() * *b_minus).trace();
    t.chiral_dim_minus = b_minus->cwiseProduct(*b_minus).sum();
  }
  return t;
}

std::string CouplingMatrix::type_label() const {
  if (type_I) return "I";
  if (theta) return "II-or-III";
  return "unclassified";
}

std::vector<CouplingMatrix> enumerate(const ModularData& md, const EnumOptions& opts,
                                      EnumStats* stats) {
  std::vector<CouplingMatrix> out;
  for (auto& z : enumerate_invariants(md, opts, stats)) {
    CouplingMatrix cm;
    cm.Z = std::move(z);
    cm.flags = classify(cm.Z, md);
    cm.type_I = type_I_factor(cm.Z);
    out.push_back(std::move(cm));
  }
  for (auto& cm : out) {
    if (cm.type_I) {
      cm.counts = trace_counts(cm.Z, &*cm.type_I, &*cm.type_I);
      continue;
    }
    for (std::size_t p = 0; p < out.size(); ++p) {
      const auto& parent = out[p];
      if (!parent.type_I || parent.Z.row(0) != cm.Z.row(0) || parent.Z.col(0) != cm.Z.col(0))
        continue;
      if (auto theta = twist_factor(cm.Z, *parent.type_I)) {
        cm.parent = static_cast<int>(p);
        cm.theta = std::move(theta);
        break;
      }
    }
    if (cm.parent) {
      const IMatrix& b = *out[*cm.parent].type_I;
      cm.counts = trace_counts(cm.Z, &b, &b);
    } else {
      cm.counts = trace_counts(cm.Z);
    }
  }
  return out;
}

}  // namespace modkit
