#pragma once

// Exact dense linear algebra over Q (and over F_p on integer matrices).

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "mt/arith.hpp"

namespace mt {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

namespace detail {

// Size of an entry as a pivot candidate: fewer digits means less coefficient growth.
inline std::size_t pivot_weight(const Rational& x) {
  return bmp::msb(bmp::abs(numerator(x))) + bmp::msb(denominator(x));
}

}  // namespace detail

/// In-place reduced row echelon form over Q. Returns the pivot columns.
template <class Derived>
std::vector<Eigen::Index> row_reduce(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index best = -1;
    std::size_t best_weight = 0;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const std::size_t w = detail::pivot_weight(m(r, col));
      if (best < 0 || w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best < 0) continue;
    m.row(row).swap(m.row(best));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right kernel, one vector per column.
template <class Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, f);
  }
  return basis;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  Matrix<typename Derived::Scalar> m = a;
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

/// Rank of an integer matrix reduced modulo the prime p.
Eigen::Index rank_mod_p(IntMatrix m, std::int64_t p);

}  // namespace mt
