#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mt/curve.hpp"
#include "mt/modular_symbol.hpp"

namespace mt {

enum class NormalizationMode { Cohomological, Neron };

const char* mode_name(NormalizationMode mode);

/// How the stored symbol relates to the cohomologically normalized one.
struct NormalizationData {
  NormalizationMode mode = NormalizationMode::Cohomological;
  /// stored = scalar * cohomological; 1 in cohomological mode.
  Rational scalar = 1;
  /// ord_p(scalar): the shift of every mu-invariant relative to cohomological mode.
  long shift(unsigned long p) const { return valuation(scalar, p); }
};

struct EigensymbolResult {
  RationalModularSymbol symbol;       // plus-part eigensymbol, cohomologically normalized
  std::vector<std::int64_t> primes;   // good primes used to cut the eigenspace
};

/// The +-eigensymbol of the curve: kernel of (iota - 1) intersected with the
/// kernels of (T_ell - a_ell) for good ell in ascending order until one-dimensional.
/// Throws EigenspaceNotOneDimensional past the Sturm bound and
/// InconsistentEigenvalues when the intersection collapses to zero.
EigensymbolResult eigensymbol(std::shared_ptr<const ManinSymbolSpace> space, const CurveData& curve);

/// Same procedure from an explicit eigenvalue list (ell, a_ell), used for testing.
EigensymbolResult eigensymbol_from_eigenvalues(std::shared_ptr<const ManinSymbolSpace> space,
                                               const std::vector<std::pair<std::int64_t, std::int64_t>>& eigenvalues);

/// ceil(index / 6) for Gamma_0(N) in weight 2.
std::int64_t sturm_bound(std::int64_t level);

/// Rescales so the values on all generators are integers with gcd 1 and
/// phi({oo} - {0}) > 0 (or the first nonzero generator value > 0 when that vanishes).
RationalModularSymbol normalize_cohomological(const RationalModularSymbol& phi);

/// Cohomological normalization, then in Neron mode the further scaling making
/// phi({oo} - {0}) = L(E,1)/Omega_E. Throws RankPositive when phi({oo} - {0}) = 0
/// in Neron mode and InvalidInput when no lratio is supplied.
std::pair<RationalModularSymbol, NormalizationData> normalize(const RationalModularSymbol& phi, const CurveData& curve,
                                                              NormalizationMode mode);

}  // namespace mt
