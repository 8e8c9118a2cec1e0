#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mt {

/// Tally of one randomized property suite at a fixed (p, n).
struct SuiteResult {
  std::string name;
  std::int64_t p = 0;
  int n = 0;
  std::size_t cases = 0;
  std::size_t hypothesis_met = 0;  // cases where the statement had content
  std::size_t violations = 0;
};

/// Random sequences theta_0 .. theta_nmax built as theta_n = theta_n^alpha + alpha^-1 cor(theta_(n-1))
/// with integral theta_n^alpha, a unit alpha and mu(theta_0) < 0 (admissible), plus control
/// sequences that break a hypothesis; the conclusion is asserted only for admissible ones.
struct MaximalityHarnessResult {
  std::int64_t p = 0;
  int n_max = 0;
  std::size_t admissible = 0;
  std::size_t violations = 0;
  std::size_t controls = 0;
  std::size_t false_assertions = 0;  // controls wrongly treated as satisfying the hypotheses
  std::size_t controls_failing_conclusion = 0;  // informative: conclusion really needs the hypotheses
};

MaximalityHarnessResult maximality_harness(std::int64_t p, int n_max, std::size_t admissible, std::uint64_t seed);

/// The deterministic tower theta_0 = p^-1, theta_n^alpha = 0, alpha = 1; true when
/// mu(theta_n) = -1 and lambda(theta_n) = p^n - 1 for all n <= n_max.
bool maximality_corestriction_tower(std::int64_t p, int n_max);

SuiteResult sum_lemma_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);
/// theta_n(phi | diag(p,1)) = cor theta_(n-1)(phi) for random symbols (n >= 1).
SuiteResult cor_theta_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);
/// mu(cor F) = mu(F), lambda(cor F) = p^n - p^(n-1) + lambda(F), and project(cor F) = p F (n >= 1).
SuiteResult cor_invariants_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);
/// Integral theta with mu(pi theta) = 0 has mu(theta) = 0 (n >= 1).
SuiteResult projection_mu_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);
/// (mu, lambda) unchanged under gamma -> gamma^e; every generator when p^n <= 125, else sampled.
SuiteResult generator_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);
/// to_T_basis followed by its inverse is the identity.
SuiteResult round_trip_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed);

/// All suites over (3, n <= 3), (5, n <= 3), (7, n <= 2).
std::vector<SuiteResult> run_property_suites(std::size_t cases, std::uint64_t seed);

}  // namespace mt
