#include "mt/eigensymbol.hpp"

#include <functional>
#include <optional>

#include "mt/hecke.hpp"

namespace mt {

const char* mode_name(NormalizationMode mode) {
  return mode == NormalizationMode::Neron ? "neron" : "coh";
}

std::int64_t sturm_bound(std::int64_t level) {
  const auto index = level_invariants(level).index;
  return (index + 5) / 6;
}

namespace {

// Columns of `basis` span the current subspace; returns a basis of the part killed by m.
RationalMatrix restrict_kernel(const RationalMatrix& m, const RationalMatrix& basis) {
  const RationalMatrix k = kernel(RationalMatrix(m * basis));
  return basis * k;
}

EigensymbolResult cut_eigenspace(const std::shared_ptr<const ManinSymbolSpace>& space,
                                 const std::function<std::optional<std::int64_t>(std::int64_t)>& eigenvalue,
                                 std::int64_t last_prime) {
  const auto dim = static_cast<Eigen::Index>(space->dimension());
  const RationalMatrix identity = RationalMatrix::Identity(dim, dim);
  RationalMatrix basis = kernel(RationalMatrix(space->involution_matrix() - identity));
  std::vector<std::int64_t> used;
  for (std::int64_t ell = 2; basis.cols() > 1 && ell <= last_prime; ++ell) {
    if (!is_prime(ell)) continue;
    const auto a = eigenvalue(ell);
    if (!a) continue;
    basis = restrict_kernel(hecke_matrix(*space, ell) - Rational(*a) * identity, basis);
    used.push_back(ell);
  }
  if (basis.cols() == 0)
    throw Error(ErrorCode::InconsistentEigenvalues, "no nonzero symbol on level " + std::to_string(space->level()) +
                                                        " has the requested Hecke eigenvalues");
  if (basis.cols() > 1)
    throw Error(ErrorCode::EigenspaceNotOneDimensional,
                "eigenspace of dimension " + std::to_string(basis.cols()) + " after primes up to " +
                    std::to_string(last_prime));
  RationalModularSymbol phi(space, basis.col(0), SymbolSign::Plus);
  return {normalize_cohomological(phi), used};
}

}  // namespace

EigensymbolResult eigensymbol(std::shared_ptr<const ManinSymbolSpace> space, const CurveData& curve) {
  if (space->level() != curve.conductor())
    throw Error(ErrorCode::InvalidInput, "space level differs from the conductor");
  const std::int64_t level = space->level();
  return cut_eigenspace(
      space,
      [&](std::int64_t ell) -> std::optional<std::int64_t> {
        if (level % ell == 0) return std::nullopt;
        return curve.a_ell(ell);
      },
      std::max<std::int64_t>(sturm_bound(level), 2));
}

EigensymbolResult eigensymbol_from_eigenvalues(std::shared_ptr<const ManinSymbolSpace> space,
                                               const std::vector<std::pair<std::int64_t, std::int64_t>>& eigenvalues) {
  std::int64_t last = 2;
  for (const auto& [ell, a] : eigenvalues) last = std::max(last, ell);
  return cut_eigenspace(
      space,
      [&](std::int64_t ell) -> std::optional<std::int64_t> {
        for (const auto& [l, a] : eigenvalues)
          if (l == ell) return a;
        return std::nullopt;
      },
      last);
}

RationalModularSymbol normalize_cohomological(const RationalModularSymbol& phi) {
  if (phi.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot normalize the zero symbol");
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& v : phi.generator_values()) {
    if (v == 0) continue;
    num_gcd = bmp::gcd(num_gcd, bmp::abs(numerator(v)));
    den_lcm = bmp::lcm(den_lcm, denominator(v));
  }
  Rational factor = Rational(den_lcm) / Rational(num_gcd);
  Rational anchor = phi.from_infinity(Cusp::integer(0));
  if (anchor == 0)
    for (const auto& v : phi.generator_values())
      if (v != 0) {
        anchor = v;
        break;
      }
  if (anchor < 0) factor = -factor;
  return phi.scaled(factor);
}

std::pair<RationalModularSymbol, NormalizationData> normalize(const RationalModularSymbol& phi, const CurveData& curve,
                                                              NormalizationMode mode) {
  RationalModularSymbol coh = normalize_cohomological(phi);
  NormalizationData data;
  data.mode = mode;
  if (mode == NormalizationMode::Cohomological) return {coh, data};
  if (!curve.lratio()) throw Error(ErrorCode::InvalidInput, "Neron normalization needs L(E,1)/Omega_E (lratio)");
  const Rational at_zero = coh.from_infinity(Cusp::integer(0));
  if (at_zero == 0)
    throw Error(ErrorCode::RankPositive, "phi({oo} - {0}) vanishes; Neron normalization is undefined in positive rank");
  if (*curve.lratio() == 0)
    throw Error(ErrorCode::InvalidInput, "lratio 0 contradicts phi({oo} - {0}) != 0");
  data.scalar = *curve.lratio() / at_zero;
  return {coh.scaled(data.scalar), data};
}

}  // namespace mt
