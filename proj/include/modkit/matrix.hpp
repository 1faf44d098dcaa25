#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace modkit {

using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

using LComplex = std::complex<long double>;
using LCMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest absolute entry; 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return static_cast<double>(m.cwiseAbs().maxCoeff());
}

inline bool is_permutation_matrix(const IMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) return false;
      row += m(i, j);
      col += m(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

}  // namespace modkit
