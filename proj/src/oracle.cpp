#include "modkit/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "modkit/invariant.hpp"

namespace modkit {

std::vector<IMatrix> brute_force_invariants(const ModularData& md, bool t_filter, double tol) {
  const int n = md.size();
  const auto& d = md.dims();
  std::vector<std::pair<int, int>> cells;
  std::vector<std::int64_t> bound;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;
      if (t_filter && !md.same_twist(a, b)) continue;
      cells.emplace_back(a, b);
      bound.push_back(static_cast<std::int64_t>(std::floor(d[a] * d[b] + 1e-9)));
    }

  std::vector<IMatrix> out;
  IMatrix Z = IMatrix::Zero(n, n);
  Z(0, 0) = 1;
  CMatrix zc(n, n);
  while (true) {
    zc = Z.cast<std::complex<double>>();
    if (max_abs(md.S * zc - zc * md.S) < tol && max_abs(md.T * zc - zc * md.T) < tol) out.push_back(Z);
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      auto& z = Z(cells[i].first, cells[i].second);
      if (z < bound[i]) {
        ++z;
        break;
      }
      z = 0;
    }
    if (i == cells.size()) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace modkit
