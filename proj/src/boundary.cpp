#include "mt/boundary.hpp"

#include <map>

namespace mt {

IntMatrix boundary_space_matrix(const ManinSymbolSpace& space, const CuspClassTable& classes, std::int64_t p) {
  const auto rows = static_cast<Eigen::Index>(space.generator_count());
  const auto cols = static_cast<Eigen::Index>(classes.size());
  IntMatrix b = IntMatrix::Zero(rows, cols);
  for (Eigen::Index g = 0; g < rows; ++g) {
    const Divisor d = space.generator_divisor(static_cast<std::size_t>(g));
    b(g, static_cast<Eigen::Index>(classes.classify(d.plus))) += 1;
    b(g, static_cast<Eigen::Index>(classes.classify(d.minus))) -= 1;
  }
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) b(i, j) = mod64(b(i, j), p);
  return b;
}

ModPSolution solve_mod_p(const IntMatrix& b, const IntVector& v, std::int64_t p) {
  const Eigen::Index cols = b.cols();
  struct Row {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs;
    std::map<std::size_t, std::int64_t> combo;  // original row -> multiplier
  };
  std::vector<Row> pivots;  // pivots[k] has a leading 1 in pivot_cols[k]
  std::vector<Eigen::Index> pivot_cols;
  ModPSolution out;
  for (Eigen::Index r = 0; r < b.rows(); ++r) {
    Row row{std::vector<std::int64_t>(static_cast<std::size_t>(cols)), mod64(v(r), p), {{static_cast<std::size_t>(r), 1}}};
    for (Eigen::Index j = 0; j < cols; ++j) row.coeffs[static_cast<std::size_t>(j)] = mod64(b(r, j), p);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::int64_t f = row.coeffs[static_cast<std::size_t>(pivot_cols[k])];
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < cols; ++j) {
        auto& x = row.coeffs[static_cast<std::size_t>(j)];
        x = mod64(x - mulmod64(f, pivots[k].coeffs[static_cast<std::size_t>(j)], p), p);
      }
      row.rhs = mod64(row.rhs - mulmod64(f, pivots[k].rhs, p), p);
      for (const auto& [orig, m] : pivots[k].combo) {
        auto& slot = row.combo[orig];
        slot = mod64(slot - mulmod64(f, m, p), p);
        if (slot == 0) row.combo.erase(orig);
      }
    }
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (row.coeffs[static_cast<std::size_t>(j)] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) {
      if (row.rhs != 0 && out.certificate.empty()) {
        for (const auto& [orig, m] : row.combo) out.certificate.push_back({orig, m});
        out.certificate_rhs = row.rhs;
      }
      continue;
    }
    const std::int64_t inv = inverse_mod64(row.coeffs[static_cast<std::size_t>(lead)], p);
    for (auto& x : row.coeffs) x = mulmod64(x, inv, p);
    row.rhs = mulmod64(row.rhs, inv, p);
    for (auto& [orig, m] : row.combo) m = mulmod64(m, inv, p);
    pivots.push_back(std::move(row));
    pivot_cols.push_back(lead);
  }
  if (!out.certificate.empty()) return out;
  // Back substitution with free variables 0.
  out.solvable = true;
  out.solution.assign(static_cast<std::size_t>(cols), 0);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::int64_t s = pivots[k].rhs;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (j != pivot_cols[k]) s = mod64(s - mulmod64(pivots[k].coeffs[static_cast<std::size_t>(j)], out.solution[static_cast<std::size_t>(j)], p), p);
    out.solution[static_cast<std::size_t>(pivot_cols[k])] = s;
  }
  return out;
}

}  // namespace mt
