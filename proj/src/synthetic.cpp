#include "mt/synthetic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "mt/group_ring.hpp"
#include "mt/mazur_tate.hpp"

namespace mt {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t random_unit(Rng& rng, std::int64_t p, std::int64_t bound) {
  for (;;) {
    const std::int64_t u = uniform(rng, -bound, bound);
    if (u % p != 0) return u;
  }
}

// Random rational with p-power denominators and occasional p-divisible numerators.
Rational random_coefficient(Rng& rng, std::int64_t p) {
  Rational x = uniform(rng, -40, 40);
  switch (uniform(rng, 0, 5)) {
    case 0: x *= p; break;
    case 1: x /= p; break;
    case 2: x = 0; break;
    default: break;
  }
  return x;
}

std::vector<Rational> random_vector(Rng& rng, std::int64_t p, std::size_t m) {
  std::vector<Rational> v(m);
  for (auto& x : v) x = random_coefficient(rng, p);
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || x != 0;
  if (!nonzero) v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(m) - 1))] = 1;
  return v;
}

RationalGroupElement random_element(Rng& rng, const GroupLevel& level) {
  return RationalGroupElement(level, random_vector(rng, level.prime(), static_cast<std::size_t>(level.order())));
}

bool is_integral_element(const RationalGroupElement& f) {
  for (const auto& c : f.coeffs())
    if (!is_integral(c) && valuation(c, static_cast<unsigned long>(f.level().prime())) < 0) return false;
  return true;
}

// Spaces used for random symbols; built once.
const std::vector<std::shared_ptr<const ManinSymbolSpace>>& test_spaces() {
  static std::once_flag once;
  static std::vector<std::shared_ptr<const ManinSymbolSpace>> spaces;
  std::call_once(once, [] {
    for (std::int64_t n : {11, 26, 37}) spaces.push_back(build_space(n));
  });
  return spaces;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult sum_lemma_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const GroupLevel level(p, n);
  const auto m = static_cast<std::size_t>(level.order());
  SuiteResult r{"sum lemma", p, n, 0, 0, 0};
  for (std::size_t k = 0; r.cases < cases; ++k) {
    std::vector<Rational> a1 = random_vector(rng, p, m), a2 = random_vector(rng, p, m);
    if (k % 2 == 0 && m > 1) {
      // Shared leading unit term at d cancelling mod p; lower terms divisible by p.
      const auto d = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(m) - 1));
      for (std::size_t i = 0; i < d; ++i) {
        a1[i] = Rational(p * uniform(rng, -9, 9));
        a2[i] = Rational(p * uniform(rng, -9, 9));
      }
      const Rational u = random_unit(rng, p, 40);
      a1[d] = u;
      a2[d] = -u + Rational(p * uniform(rng, -9, 9));
      const Rational scale = Rational(ipow(static_cast<unsigned long>(p), uniform(rng, 0, 2))) / Rational(p);
      for (std::size_t i = 0; i < m; ++i) {
        a1[i] *= scale;
        a2[i] *= scale;
      }
    }
    const auto f1 = from_T_basis(level, a1), f2 = from_T_basis(level, a2);
    if ((f1 + f2).is_zero()) continue;
    const auto v = sum_lemma_check(f1, f2);
    ++r.cases;
    if (v.hypothesis_met) {
      ++r.hypothesis_met;
      if (!v.holds) ++r.violations;
    }
  }
  return r;
}

SuiteResult cor_theta_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r{"theta of p-scaled symbol = cor", p, n, 0, 0, 0};
  const auto& spaces = test_spaces();
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& space = spaces[k % spaces.size()];
    RationalVector coords(static_cast<Eigen::Index>(space->dimension()));
    for (Eigen::Index i = 0; i < coords.size(); ++i) coords(i) = Rational(uniform(rng, -6, 6));
    const RationalModularSymbol phi(space, coords);
    const auto scaled = scale_action(phi, p);
    const auto lhs = theta_of([&](const Cusp& c) { return scaled.from_infinity(c); }, p, n);
    const auto rhs = corestriction(theta_of([&](const Cusp& c) { return phi.from_infinity(c); }, p, n - 1));
    ++r.cases;
    ++r.hypothesis_met;
    if (!(lhs - rhs).is_zero()) ++r.violations;
  }
  return r;
}

SuiteResult cor_invariants_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const GroupLevel lower(p, n - 1);
  SuiteResult r{"cor invariants", p, n, 0, 0, 0};
  const std::int64_t shift = ipow64(p, n) - ipow64(p, n - 1);
  for (std::size_t k = 0; k < cases; ++k) {
    const auto f = random_element(rng, lower);
    const auto c = corestriction(f);
    const auto fi = invariants(f), ci = invariants(c);
    ++r.cases;
    ++r.hypothesis_met;
    const bool ok = ci.mu == fi.mu && ci.lambda == shift + fi.lambda && (project(c) - Rational(p) * f).is_zero();
    if (!ok) ++r.violations;
  }
  return r;
}

SuiteResult projection_mu_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const GroupLevel level(p, n);
  SuiteResult r{"projection mu", p, n, 0, 0, 0};
  // Degenerate draws (zero projection) are redrawn, so exactly `cases` are counted.
  for (std::size_t k = 0; r.cases < cases; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(level.order()));
    const bool divisible = k % 3 == 0;
    for (auto& x : c) x = Rational(uniform(rng, -30, 30) * (divisible && uniform(rng, 0, 3) != 0 ? p : 1));
    c[0] += 1;
    const RationalGroupElement theta(level, c);
    const auto down = project(theta);
    if (theta.is_zero() || down.is_zero()) continue;
    ++r.cases;
    if (invariants(down).mu == 0) {
      ++r.hypothesis_met;
      if (invariants(theta).mu != 0) ++r.violations;
    }
  }
  return r;
}

SuiteResult generator_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const GroupLevel level(p, n);
  const std::int64_t m = level.order();
  SuiteResult r{"generator independence", p, n, 0, 0, 0};
  for (std::size_t k = 0; k < cases; ++k) {
    const auto f = random_element(rng, level);
    const auto base = invariants(f);
    std::vector<std::int64_t> exponents;
    if (k < 4 && m <= 125) {
      for (std::int64_t e = 1; e < m; ++e)
        if (e % p != 0) exponents.push_back(e);
    } else {
      exponents.push_back(random_unit(rng, p, m));
    }
    for (auto e : exponents) {
      ++r.cases;
      ++r.hypothesis_met;
      if (!(invariants_with_generator(f, e) == base)) ++r.violations;
    }
  }
  return r;
}

SuiteResult round_trip_suite(std::int64_t p, int n, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  const GroupLevel level(p, n);
  SuiteResult r{"T-basis round trip", p, n, 0, 0, 0};
  for (std::size_t k = 0; k < cases; ++k) {
    const auto f = random_element(rng, level);
    ++r.cases;
    ++r.hypothesis_met;
    if (!(from_T_basis(level, to_T_basis(f)) - f).is_zero()) ++r.violations;
  }
  return r;
}

std::vector<SuiteResult> run_property_suites(std::size_t cases, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  const std::vector<std::pair<std::int64_t, int>> grid = {{3, 3}, {5, 3}, {7, 2}};
  std::uint64_t s = seed;
  for (const auto& [p, n_max] : grid) {
    for (int n = 1; n <= n_max; ++n) {
      out.push_back(sum_lemma_suite(p, n, cases, ++s));
      out.push_back(cor_theta_suite(p, n, cases, ++s));
      out.push_back(cor_invariants_suite(p, n, cases, ++s));
      out.push_back(projection_mu_suite(p, n, cases, ++s));
      out.push_back(generator_suite(p, n, cases, ++s));
      out.push_back(round_trip_suite(p, n, cases, ++s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Hypotheses of the abstract maximality theorem for a finite sequence, checked
// from the sequence alone: alpha a unit, theta_n - alpha^-1 cor theta_(n-1)
// integral for n >= 1, and some mu(theta_n) < 0.
bool maximality_hypotheses_hold(const std::vector<RationalGroupElement>& seq, const Rational& alpha, std::int64_t p) {
  const auto up = static_cast<unsigned long>(p);
  if (alpha == 0 || valuation(alpha, up) != 0) return false;
  for (std::size_t n = 1; n < seq.size(); ++n)
    if (!is_integral_element(seq[n] - (Rational(1) / alpha) * corestriction(seq[n - 1]))) return false;
  for (const auto& t : seq)
    if (!t.is_zero() && invariants(t).mu < 0) return true;
  return false;
}

bool maximality_conclusion_holds(const std::vector<RationalGroupElement>& seq, std::int64_t p) {
  if (seq.front().is_zero()) return false;
  const long mu0 = invariants(seq.front()).mu;
  if (mu0 >= 0) return false;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n].is_zero()) return false;
    const auto inv = invariants(seq[n]);
    if (inv.mu != mu0 || inv.lambda != ipow64(p, static_cast<int>(n)) - 1) return false;
  }
  return true;
}

std::vector<RationalGroupElement> unroll(const RationalGroupElement& theta0, const std::vector<RationalGroupElement>& stab,
                                         const Rational& alpha) {
  std::vector<RationalGroupElement> seq{theta0};
  for (const auto& s : stab) seq.push_back(s + (Rational(1) / alpha) * corestriction(seq.back()));
  return seq;
}

}  // namespace

bool maximality_corestriction_tower(std::int64_t p, int n_max) {
  std::vector<RationalGroupElement> stab;
  for (int n = 1; n <= n_max; ++n) stab.push_back(RationalGroupElement::filled(GroupLevel(p, n), Rational(0)));
  const RationalGroupElement theta0(GroupLevel(p, 0), {Rational(1, p)});
  const auto seq = unroll(theta0, stab, Rational(1));
  return maximality_hypotheses_hold(seq, Rational(1), p) && maximality_conclusion_holds(seq, p);
}

MaximalityHarnessResult maximality_harness(std::int64_t p, int n_max, std::size_t admissible, std::uint64_t seed) {
  Rng rng(seed);
  MaximalityHarnessResult r;
  r.p = p;
  r.n_max = n_max;
  auto integral_element = [&](int n) {
    const GroupLevel level(p, n);
    std::vector<Rational> c(static_cast<std::size_t>(level.order()));
    for (auto& x : c) x = Rational(uniform(rng, -25, 25) * (uniform(rng, 0, 2) == 0 ? p : 1));
    return RationalGroupElement(level, std::move(c));
  };
  auto make = [&](int kind, Rational& alpha) {
    alpha = Rational(random_unit(rng, p, p * p));
    const long t = static_cast<long>(uniform(rng, 1, 3));
    Rational theta0 = Rational(random_unit(rng, p, 50)) / Rational(ipow(static_cast<unsigned long>(p), t));
    std::vector<RationalGroupElement> stab;
    for (int n = 1; n <= n_max; ++n) stab.push_back(integral_element(n));
    switch (kind) {
      case 1: theta0 = Rational(uniform(rng, -50, 50)); break;  // everything integral
      case 2: {                                                 // stabilized term not integral
        auto& s = stab[static_cast<std::size_t>(uniform(rng, 0, n_max - 1))];
        s[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(s.size()) - 1))] +=
            Rational(1, p * p * p * p);
        break;
      }
      case 3: alpha = Rational(p * random_unit(rng, p, p)); break;  // alpha not a unit
      default: break;
    }
    return unroll(RationalGroupElement(GroupLevel(p, 0), {theta0}), stab, alpha);
  };

  while (r.admissible < admissible) {
    Rational alpha;
    const auto seq = make(0, alpha);
    if (!maximality_hypotheses_hold(seq, alpha, p)) continue;  // cannot happen by construction, but never assume
    ++r.admissible;
    if (!maximality_conclusion_holds(seq, p)) ++r.violations;
    for (int kind = 1; kind <= 3; ++kind) {
      Rational a;
      const auto control = make(kind, a);
      ++r.controls;
      if (maximality_hypotheses_hold(control, a, p)) ++r.false_assertions;
      if (!maximality_conclusion_holds(control, p)) ++r.controls_failing_conclusion;
    }
  }
  return r;
}

}  // namespace mt
