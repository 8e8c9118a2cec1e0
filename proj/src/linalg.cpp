#include "mt/linalg.hpp"

namespace mt {

Eigen::Index rank_mod_p(IntMatrix m, std::int64_t p) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = mod64(m(i, j), p);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(row).swap(m.row(piv));
    const std::int64_t inv = inverse_mod64(m(row, col), p);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = mulmod64(m(row, j), inv, p);
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      const std::int64_t f = m(r, col);
      if (f == 0) continue;
      for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) = mod64(m(r, j) - mulmod64(f, m(row, j), p), p);
    }
    ++row;
  }
  return row;
}

}  // namespace mt
