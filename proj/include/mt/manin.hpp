#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "mt/arith.hpp"
#include "mt/cusp.hpp"
#include "mt/linalg.hpp"
#include "mt/p1.hpp"

namespace mt {

/// Sparse Q-linear combination of basis elements: (basis index, coefficient), sorted by index.
using SparseExpr = std::vector<std::pair<std::size_t, Rational>>;

/// Genus and elliptic/cusp counts of X_0(N).
struct LevelInvariants {
  std::int64_t index = 0;  // [SL2(Z) : Gamma_0(N)]
  std::int64_t nu2 = 0;
  std::int64_t nu3 = 0;
  std::int64_t cusps = 0;
  std::int64_t genus = 0;
  std::int64_t modsym_dimension() const { return 2 * genus + cusps - 1; }
};

LevelInvariants level_invariants(std::int64_t level);

/// Weight-2 modular symbols for Gamma_0(N), presented by Manin symbols.
///
/// Generators are the points of P^1(Z/NZ); generator (c : d) stands for the
/// divisor D(c : d) = {g 0} - {g oo} with g in SL2(Z) of bottom row (c, d).
/// The space is the Q-span of the generators modulo x + xS = 0 and
/// x + xT + xT^2 = 0. A modular symbol (a Gamma_0(N)-invariant functional on
/// degree-zero divisors) is a functional on this space.
class ManinSymbolSpace {
 public:
  static constexpr std::int64_t kDefaultLevelBound = 3000;

  /// Assemble from a precomputed quotient (cache path); checks shapes.
  ManinSymbolSpace(std::int64_t level, std::vector<std::size_t> basis, std::vector<SparseExpr> expressions);

  std::int64_t level() const { return p1_.level(); }
  const P1List& p1() const { return p1_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t generator_count() const { return p1_.size(); }

  /// Generators whose classes form the quotient basis.
  const std::vector<std::size_t>& basis_generators() const { return basis_; }
  const SparseExpr& expression(std::size_t generator) const { return expressions_[generator]; }

  std::size_t generator_index(std::int64_t c, std::int64_t d) const;
  Divisor generator_divisor(std::size_t generator) const;

  /// Class of a divisor in the quotient basis (via the continued-fraction trick).
  RationalVector coordinates(const Divisor& divisor) const;
  /// Generator multiset for {oo} - {r} (signed +1 each).
  std::vector<std::size_t> decompose_from_infinity(const Cusp& r) const;

  /// Matrix J with (J phi)_j = phi(iota x_j), iota(r) = -r.
  RationalMatrix involution_matrix() const;

 private:
  P1List p1_;
  std::vector<std::size_t> basis_;
  std::vector<SparseExpr> expressions_;
};

/// Builds the quotient by sparse elimination over Q. Throws LevelTooLarge
/// when level > level_bound.
std::shared_ptr<const ManinSymbolSpace> build_space(std::int64_t level,
                                                    std::int64_t level_bound = ManinSymbolSpace::kDefaultLevelBound);

/// Relation quotient computed without the 2-term shortcut: dense rank of the
/// full S/T relation matrix. Independent check of dimension().
std::size_t relation_matrix_corank(std::int64_t level);

}  // namespace mt
