#pragma once

#include <cstdint>
#include <vector>

#include "mt/cusp.hpp"
#include "mt/linalg.hpp"
#include "mt/manin.hpp"

namespace mt {

/// Merel's set of integer matrices of determinant n realizing T_n on Manin symbols.
std::vector<Mat2> heilbronn_merel(std::int64_t n);

/// Matrix of T_ell acting on symbols as functionals: (T phi)_j = phi(T x_j) for
/// the basis generators x_j, so an eigensymbol satisfies T * coords = a_ell * coords.
/// Uses Merel's matrices; requires ell prime to the level.
RationalMatrix hecke_matrix(const ManinSymbolSpace& space, std::int64_t ell);

/// Same operator from the double-coset representatives [ell 0; 0 1], [1 u; 0 ell]
/// acting on divisors; also valid (as U_ell) when ell divides the level.
RationalMatrix hecke_matrix_cosets(const ManinSymbolSpace& space, std::int64_t ell);

}  // namespace mt
