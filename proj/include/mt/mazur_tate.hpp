#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mt/boundary.hpp"
#include "mt/curve.hpp"
#include "mt/eigensymbol.hpp"
#include "mt/group_ring.hpp"
#include "mt/modular_symbol.hpp"
#include "mt/padic.hpp"

namespace mt {

/// vartheta_n(phi) = sum over a in (Z/p^n)^x of phi({oo} - {a/p^n}) sigma_a,
/// stored by residue a in [0, p^n) (zero at non-units).
struct RawMazurTate {
  std::int64_t p = 0;
  int n = 0;
  std::vector<Rational> by_residue;
};

RawMazurTate theta_raw(const RationalModularSymbol& phi, std::int64_t p, int n);

/// theta_n(phi) in Q[G_n]: the coefficient of gamma_n^k is the sum of
/// phi({oo} - {a/p^(n+1)}) over units a mod p^(n+1) with sigma_a |-> gamma_n^k.
RationalGroupElement theta(const RationalModularSymbol& phi, std::int64_t p, int n, std::int64_t generator_exponent = 1);

/// theta_n of any functional r |-> value({oo} - {r}), e.g. a ScaledSymbol.
template <class Evaluator>
RationalGroupElement theta_of(const Evaluator& from_infinity, std::int64_t p, int n, std::int64_t generator_exponent = 1) {
  const GroupLevel level(p, n, generator_exponent);
  auto out = RationalGroupElement::filled(level, Rational(0));
  for (std::int64_t a = 1; a < level.modulus(); ++a)
    if (a % p != 0) out[static_cast<std::size_t>(level.discrete_log(a))] += from_infinity(Cusp(a, level.modulus()));
  return out;
}

/// Projection of vartheta_(n+1) along the discrete-log map (independent route to theta).
RationalGroupElement project_raw(const RawMazurTate& raw, std::int64_t generator_exponent = 1);

/// phi^alpha({oo} - {r}) = phi({oo} - {r}) - alpha^-1 phi({oo} - {p r}).
PAdic stabilized_value(const RationalModularSymbol& phi, const PAdic& alpha, const Cusp& r);

/// theta_n(phi^alpha), assembled from divisor-level values of the p-stabilized symbol.
PAdicGroupElement theta_stabilized(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n,
                                   std::int64_t generator_exponent = 1);

/// theta_n - alpha^-1 cor(theta_(n-1)); at n = 0 the corestricted term is
/// (p - 1) phi({oo} - {0}) sigma_1 (the p - 1 integers a/1 are all equivalent to 0).
PAdicGroupElement theta_stabilized_via_cor(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n,
                                           std::int64_t generator_exponent = 1);

struct NormRelationReport {
  int n = 0;
  bool residual_zero = false;
  long residual_valuation_bound = 0;  // all residual coefficients vanish at least to this valuation
  long precision = 0;
};

NormRelationReport check_norm_relation(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n);

// ---------------------------------------------------------------------------
// Boundary congruences.

struct BoundaryCongruence {
  std::int64_t p = 0;
  bool solvable = false;
  std::vector<std::string> class_labels;
  std::vector<Cusp> class_representatives;
  /// psi on each cusp class, normalized by psi(class of oo) = 0.
  std::vector<std::int64_t> psi;
  /// For unsolvable systems: generators whose equations combine to 0 = nonzero.
  struct Equation {
    std::size_t generator;
    std::int64_t c, d;
    std::int64_t multiplier;
    std::int64_t rhs;  // phi(D(c : d)) mod p
  };
  std::vector<Equation> certificate;
  std::int64_t certificate_rhs = 0;
};

/// Solves psi(class(g 0)) - psi(class(g oo)) = phi(D(g)) mod p over all generators.
/// phi must be p-integral.
BoundaryCongruence boundary_congruence(const RationalModularSymbol& phi, std::int64_t p);

// ---------------------------------------------------------------------------
// Congruence criterion phi({oo} - {a/p^(n+1)}) = alpha phi({oo} - {a/p^n}) mod p^t.

struct MaximalityVerdict {
  long m = 0;                          // ord_p phi({oo} - {0})
  int t = 0;
  bool criterion_holds = false;        // some alpha works for all sampled a, n <= n_max
  std::optional<std::int64_t> alpha;   // the smallest such alpha mod p^t
  bool exhaustive = true;              // all a sampled (else random sample)
  bool conclusions_applicable = false; // criterion holds and t > m
  bool conclusions_verified = false;   // mu(theta_n) = m, lambda = p^n - 1 for n <= n_max
};

MaximalityVerdict maximality_criterion_check(const RationalModularSymbol& phi, std::int64_t p, int n_max, int t,
                                             std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Classifier.

enum class Verdict { CaseA, CaseB, Inconclusive };
const char* verdict_name(Verdict v);

struct MTRequest {
  CurveData curve;
  std::int64_t p = 0;
  int n_max = 2;
  NormalizationMode mode = NormalizationMode::Cohomological;
  std::optional<long> precision;
  std::int64_t generator_exponent = 1;
  /// Prebuilt eigensymbol (cohomologically normalized); computed when absent.
  std::optional<RationalModularSymbol> eigensymbol;
};

struct LevelRow {
  int n = 0;
  bool zero = false;  // theta_n = 0: invariants undefined
  long mu = 0;
  std::int64_t lambda = 0;
  bool is_maximal = false;  // lambda = p^n - 1
  bool integral = false;
  long mu_cohomological = 0;
  std::optional<long> mu_neron;
  bool stabilized_known = false;
  long stab_mu = 0;
  std::int64_t stab_lambda = 0;
  bool stab_integral = false;
};

struct DichotomyReport {
  std::string label;
  std::int64_t conductor = 0;
  std::int64_t p = 0;
  int n_max = 0;
  NormalizationMode mode = NormalizationMode::Cohomological;
  std::int64_t a_p = 0;
  Rational phi_at_zero;             // stored symbol at {oo} - {0}
  Rational normalization_scalar;    // stored = scalar * cohomological
  long normalization_shift = 0;
  std::optional<long> lratio_valuation;
  long precision = 0;
  std::string alpha;                // unit root mod p^precision, decimal
  std::vector<LevelRow> levels;
  bool stabilized = false;          // stabilized invariants agree on the top two levels
  bool norm_relation_verified = false;
  std::vector<NormRelationReport> norm_relations;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> diagnostics;
  std::optional<BoundaryCongruence> boundary;
  std::optional<MaximalityVerdict> maximality;
};

/// Per-level invariants of theta_n without stabilization (any p, including bad p).
struct InvariantsTable {
  std::string label;
  std::int64_t conductor = 0;
  std::int64_t p = 0;
  int n_max = 0;
  NormalizationMode mode = NormalizationMode::Cohomological;
  std::int64_t a_p = 0;
  Rational phi_at_zero;
  Rational normalization_scalar;
  long normalization_shift = 0;
  std::optional<long> lratio_valuation;
  std::vector<LevelRow> levels;
};

/// `coh` is the cohomologically normalized eigensymbol of `curve`.
InvariantsTable invariants_table(const RationalModularSymbol& coh, const CurveData& curve, std::int64_t p, int n_max,
                                 NormalizationMode mode, std::int64_t generator_exponent = 1);

/// Runs the finite-level dichotomy. Throws NotGoodOrdinary when p divides the
/// conductor or a_p, RankPositive for Neron mode in positive analytic rank.
DichotomyReport classify(const MTRequest& request);

/// Default working precision: n_max + 20 guard digits + |floor of mu|.
long default_precision(int n_max, long mu_floor);

}  // namespace mt
