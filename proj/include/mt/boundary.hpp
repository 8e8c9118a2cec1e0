#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mt/cusp_classes.hpp"
#include "mt/linalg.hpp"
#include "mt/manin.hpp"

namespace mt {

/// A function on cusp classes; induces the modular symbol {r} - {s} -> psi(r) - psi(s).
template <class Scalar>
class BoundarySymbol {
 public:
  BoundarySymbol(const CuspClassTable& classes, std::vector<Scalar> values)
      : classes_(&classes), values_(std::move(values)) {}

  const std::vector<Scalar>& values() const { return values_; }
  Scalar evaluate(const Divisor& d) const {
    return values_[classes_->classify(d.plus)] - values_[classes_->classify(d.minus)];
  }

 private:
  const CuspClassTable* classes_;
  std::vector<Scalar> values_;
};

/// Rows: generators (divisor D(c : d) = {g 0} - {g oo}); columns: cusp classes.
/// Entry = [class(g 0) = j] - [class(g oo) = j] mod p.
IntMatrix boundary_space_matrix(const ManinSymbolSpace& space, const CuspClassTable& classes, std::int64_t p);

inline IntMatrix boundary_space_matrix(std::int64_t level, std::int64_t p) {
  return boundary_space_matrix(*build_space(level), CuspClassTable(level), p);
}

/// One equation B_row . psi = rhs of an inconsistent combination.
struct CertificateEquation {
  std::size_t row;
  std::int64_t multiplier;  // coefficient in the combination
};

/// Solution of B psi = v over F_p, or a combination of rows with
/// sum(multiplier * B_row) = 0 and sum(multiplier * v_row) != 0.
struct ModPSolution {
  bool solvable = false;
  std::vector<std::int64_t> solution;  // free variables set to 0
  std::vector<CertificateEquation> certificate;
  std::int64_t certificate_rhs = 0;  // sum(multiplier * v_row) mod p
};

ModPSolution solve_mod_p(const IntMatrix& b, const IntVector& v, std::int64_t p);

}  // namespace mt
