#include "mt/mazur_tate.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

namespace mt {

namespace {

// phi({oo} - {a / m}) for a = 0 .. m-1 prime to p (zero elsewhere), evaluated in parallel.
std::vector<Rational> values_over_units(const RationalModularSymbol& phi, std::int64_t p, std::int64_t m) {
  std::vector<Rational> out(static_cast<std::size_t>(m));
  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t a = begin; a < end; ++a)
      if (a % p != 0) out[static_cast<std::size_t>(a)] = phi.from_infinity(Cusp(a, m));
  };
  const std::int64_t workers = std::clamp<std::int64_t>(m / 256, 1, std::max(1u, std::thread::hardware_concurrency()));
  const std::int64_t chunk = (m + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::int64_t b = 0; b < m; b += chunk) jobs.push_back(std::async(std::launch::async, work, b, std::min(m, b + chunk)));
  for (auto& j : jobs) j.get();
  return out;
}

PAdic padic(const Rational& x, std::int64_t p, long precision) {
  return PAdic::from_rational(x, static_cast<unsigned long>(p), precision);
}

}  // namespace

RawMazurTate theta_raw(const RationalModularSymbol& phi, std::int64_t p, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "vartheta_n needs n >= 1");
  return {p, n, values_over_units(phi, p, ipow64(p, n))};
}

RationalGroupElement project_raw(const RawMazurTate& raw, std::int64_t generator_exponent) {
  const GroupLevel level(raw.p, raw.n - 1, generator_exponent);
  auto out = RationalGroupElement::filled(level, Rational(0));
  for (std::size_t a = 0; a < raw.by_residue.size(); ++a)
    if (static_cast<std::int64_t>(a) % raw.p != 0)
      out[static_cast<std::size_t>(level.discrete_log(static_cast<std::int64_t>(a)))] += raw.by_residue[a];
  return out;
}

RationalGroupElement theta(const RationalModularSymbol& phi, std::int64_t p, int n, std::int64_t generator_exponent) {
  const GroupLevel level(p, n, generator_exponent);
  const auto values = values_over_units(phi, p, level.modulus());
  auto out = RationalGroupElement::filled(level, Rational(0));
  for (std::int64_t a = 1; a < level.modulus(); ++a)
    if (a % p != 0) out[static_cast<std::size_t>(level.discrete_log(a))] += values[static_cast<std::size_t>(a)];
  return out;
}

PAdic stabilized_value(const RationalModularSymbol& phi, const PAdic& alpha, const Cusp& r) {
  const auto p = static_cast<std::int64_t>(alpha.prime());
  const long precision = alpha.absolute_precision();
  const Rational direct = phi.from_infinity(r);
  const Rational shifted = scale_action(phi, p).from_infinity(r);
  const PAdic one = PAdic::from_integer(1, alpha.prime(), precision);
  return padic(direct, p, precision) - (one / alpha) * padic(shifted, p, precision);
}

PAdicGroupElement theta_stabilized(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n,
                                   std::int64_t generator_exponent) {
  const GroupLevel level(p, n, generator_exponent);
  const std::int64_t m = level.modulus();
  std::vector<std::optional<PAdic>> values(static_cast<std::size_t>(m));
  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t a = begin; a < end; ++a)
      if (a % p != 0) values[static_cast<std::size_t>(a)] = stabilized_value(phi, alpha, Cusp(a, m));
  };
  const std::int64_t workers = std::clamp<std::int64_t>(m / 256, 1, std::max(1u, std::thread::hardware_concurrency()));
  const std::int64_t chunk = (m + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::int64_t b = 0; b < m; b += chunk) jobs.push_back(std::async(std::launch::async, work, b, std::min(m, b + chunk)));
  for (auto& j : jobs) j.get();

  auto out = PAdicGroupElement::filled(level, PAdic(static_cast<unsigned long>(p), alpha.absolute_precision()));
  for (std::int64_t a = 1; a < m; ++a)
    if (a % p != 0) out[static_cast<std::size_t>(level.discrete_log(a))] += *values[static_cast<std::size_t>(a)];
  return out;
}

PAdicGroupElement theta_stabilized_via_cor(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n,
                                           std::int64_t generator_exponent) {
  const long precision = alpha.absolute_precision();
  const PAdic inv_alpha = PAdic::from_integer(1, alpha.prime(), precision) / alpha;
  const auto current = to_padic(theta(phi, p, n, generator_exponent), precision);
  PAdicGroupElement previous_cor = current;
  if (n == 0) {
    const Rational at_zero = phi.from_infinity(Cusp::integer(0)) * Rational(p - 1);
    previous_cor = PAdicGroupElement(current.level(), {padic(at_zero, p, precision)});
  } else {
    previous_cor = corestriction(to_padic(theta(phi, p, n - 1, generator_exponent), precision));
  }
  return current - inv_alpha * previous_cor;
}

NormRelationReport check_norm_relation(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n) {
  const auto left = theta_stabilized(phi, alpha, p, n);
  const auto right = theta_stabilized_via_cor(phi, alpha, p, n);
  const auto residual = left - right;
  NormRelationReport r;
  r.n = n;
  r.precision = alpha.absolute_precision();
  r.residual_zero = residual.is_zero();
  r.residual_valuation_bound = kInfiniteValuation;
  for (const auto& c : residual.coeffs()) r.residual_valuation_bound = std::min(r.residual_valuation_bound, c.valuation_lower_bound());
  return r;
}

// ---------------------------------------------------------------------------

BoundaryCongruence boundary_congruence(const RationalModularSymbol& phi, std::int64_t p) {
  const ManinSymbolSpace& space = phi.space();
  const CuspClassTable classes(space.level());
  const IntMatrix b = boundary_space_matrix(space, classes, p);
  IntVector v(b.rows());
  const Integer pp = p;
  for (Eigen::Index g = 0; g < b.rows(); ++g) {
    const Rational& x = phi.generator_values()[static_cast<std::size_t>(g)];
    if (valuation(x, static_cast<unsigned long>(p)) < 0)
      throw Error(ErrorCode::InvalidInput, "boundary congruence needs a p-integral symbol");
    v(g) = static_cast<std::int64_t>(reduce_mod(x, pp));
  }
  const ModPSolution sol = solve_mod_p(b, v, p);

  BoundaryCongruence out;
  out.p = p;
  out.solvable = sol.solvable;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.class_labels.push_back(classes.label(i));
    out.class_representatives.push_back(classes[i].representative);
  }
  if (sol.solvable) {
    const std::int64_t base = sol.solution[classes.classify(Cusp::infinity())];
    for (auto x : sol.solution) out.psi.push_back(mod64(x - base, p));
  } else {
    for (const auto& eq : sol.certificate) {
      const P1Point pt = space.p1().points()[eq.row];
      out.certificate.push_back({eq.row, pt.c, pt.d, eq.multiplier, v(static_cast<Eigen::Index>(eq.row))});
    }
    out.certificate_rhs = sol.certificate_rhs;
  }
  return out;
}

// ---------------------------------------------------------------------------

MaximalityVerdict maximality_criterion_check(const RationalModularSymbol& phi, std::int64_t p, int n_max, int t,
                                             std::uint64_t seed) {
  constexpr std::int64_t kExhaustiveLimit = 10000;
  constexpr int kSamples = 200;
  MaximalityVerdict out;
  out.t = t;
  const Rational at_zero = phi.from_infinity(Cusp::integer(0));
  out.m = valuation(at_zero, static_cast<unsigned long>(p));
  const Integer modulus = ipow(static_cast<unsigned long>(p), t);
  const std::int64_t mod_small = ipow64(p, t);

  // Pairs (phi(a/p^(n+1)), phi(a/p^n)) mod p^t.
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::mt19937_64 rng(seed);
  for (int n = 0; n <= n_max; ++n) {
    const std::int64_t top = ipow64(p, n + 1), bottom = ipow64(p, n);
    std::vector<std::int64_t> as;
    if (top <= kExhaustiveLimit) {
      for (std::int64_t a = 1; a < top; ++a)
        if (a % p != 0) as.push_back(a);
    } else {
      out.exhaustive = false;
      std::uniform_int_distribution<std::int64_t> dist(1, top - 1);
      while (static_cast<int>(as.size()) < kSamples) {
        const std::int64_t a = dist(rng);
        if (a % p != 0) as.push_back(a);
      }
    }
    for (auto a : as) {
      const Rational hi = phi.from_infinity(Cusp(a, top));
      const Rational lo = phi.from_infinity(Cusp(a, bottom));
      if (valuation(hi, static_cast<unsigned long>(p)) < 0 || valuation(lo, static_cast<unsigned long>(p)) < 0)
        throw Error(ErrorCode::InvalidInput, "congruence criterion needs a p-integral symbol");
      pairs.emplace_back(static_cast<std::int64_t>(reduce_mod(hi, modulus)), static_cast<std::int64_t>(reduce_mod(lo, modulus)));
    }
  }
  for (std::int64_t alpha = 1; alpha < mod_small && !out.criterion_holds; ++alpha) {
    if (alpha % p == 0) continue;
    bool ok = true;
    for (const auto& [hi, lo] : pairs)
      if (hi != mulmod64(alpha, lo, mod_small)) {
        ok = false;
        break;
      }
    if (ok) {
      out.criterion_holds = true;
      out.alpha = alpha;
    }
  }
  out.conclusions_applicable = out.criterion_holds && at_zero != 0 && t > out.m;
  if (out.conclusions_applicable) {
    out.conclusions_verified = true;
    for (int n = 0; n <= n_max; ++n) {
      const auto th = theta(phi, p, n);
      if (th.is_zero()) {
        out.conclusions_verified = false;
        break;
      }
      const auto inv = invariants(th);
      if (inv.mu != out.m || inv.lambda != ipow64(p, n) - 1) out.conclusions_verified = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CaseA: return "CaseA";
    case Verdict::CaseB: return "CaseB";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

long default_precision(int n_max, long mu_floor) { return n_max + 20 + std::abs(mu_floor); }

InvariantsTable invariants_table(const RationalModularSymbol& coh, const CurveData& curve, std::int64_t p, int n_max,
                                 NormalizationMode mode, std::int64_t generator_exponent) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, "p must be an odd prime");
  if (n_max < 0) throw Error(ErrorCode::InvalidInput, "n_max must be non-negative");
  const auto up = static_cast<unsigned long>(p);
  const auto [phi, norm] = normalize(coh, curve, mode);
  InvariantsTable t;
  t.label = curve.label();
  t.conductor = curve.conductor();
  t.p = p;
  t.n_max = n_max;
  t.mode = mode;
  t.a_p = curve.a_ell(p);
  t.phi_at_zero = phi.from_infinity(Cusp::integer(0));
  t.normalization_scalar = norm.scalar;
  t.normalization_shift = norm.shift(up);
  if (curve.lratio() && *curve.lratio() != 0) t.lratio_valuation = valuation(*curve.lratio(), up);
  const Rational coh_at_zero = coh.from_infinity(Cusp::integer(0));
  for (int n = 0; n <= n_max; ++n) {
    LevelRow row;
    row.n = n;
    const auto th = theta(phi, p, n, generator_exponent);
    row.integral = true;
    for (const auto& c : th.coeffs())
      if (valuation(c, up) < 0) row.integral = false;
    if (th.is_zero()) {
      row.zero = true;
    } else {
      const auto inv = invariants(th);
      row.mu = inv.mu;
      row.lambda = inv.lambda;
      row.is_maximal = inv.lambda == ipow64(p, n) - 1;
      row.mu_cohomological = inv.mu - t.normalization_shift;
      if (curve.lratio() && *curve.lratio() != 0 && coh_at_zero != 0)
        row.mu_neron = row.mu_cohomological + valuation(*curve.lratio() / coh_at_zero, up);
    }
    t.levels.push_back(row);
  }
  return t;
}

namespace {

struct StabilizedRun {
  std::vector<IwasawaInvariants> invariants;
  std::vector<bool> integral;
  std::vector<NormRelationReport> norm;
};

StabilizedRun run_stabilized(const RationalModularSymbol& phi, const PAdic& alpha, std::int64_t p, int n_max,
                             std::int64_t k) {
  StabilizedRun run;
  for (int n = 0; n <= n_max; ++n) {
    const auto el = theta_stabilized(phi, alpha, p, n, k);
    run.invariants.push_back(invariants(el));
    bool integral = true;
    for (const auto& c : el.coeffs())
      if (!c.is_zero() && c.valuation() < 0) integral = false;
    run.integral.push_back(integral);
    run.norm.push_back(check_norm_relation(phi, alpha, p, n));
  }
  return run;
}

}  // namespace

DichotomyReport classify(const MTRequest& request) {
  const CurveData& curve = request.curve;
  const std::int64_t p = request.p;
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, "p must be an odd prime");
  if (request.n_max < 0) throw Error(ErrorCode::InvalidInput, "n_max must be non-negative");
  if (curve.conductor() % p == 0)
    throw Error(ErrorCode::NotGoodOrdinary, "p = " + std::to_string(p) + " divides the conductor " +
                                                std::to_string(curve.conductor()));
  const std::int64_t a_p = curve.a_ell(p);
  if (mod64(a_p, p) == 0)
    throw Error(ErrorCode::NotGoodOrdinary, "a_p = " + std::to_string(a_p) + " is divisible by p (supersingular)");

  const RationalModularSymbol coh =
      request.eigensymbol ? *request.eigensymbol : eigensymbol(build_space(curve.conductor()), curve).symbol;
  const RationalModularSymbol phi = normalize(coh, curve, request.mode).first;
  InvariantsTable table = invariants_table(coh, curve, p, request.n_max, request.mode, request.generator_exponent);

  DichotomyReport rep;
  rep.label = table.label;
  rep.conductor = table.conductor;
  rep.p = p;
  rep.n_max = request.n_max;
  rep.mode = request.mode;
  rep.a_p = a_p;
  rep.phi_at_zero = table.phi_at_zero;
  rep.normalization_scalar = table.normalization_scalar;
  rep.normalization_shift = table.normalization_shift;
  rep.lratio_valuation = table.lratio_valuation;
  rep.levels = std::move(table.levels);
  const auto up = static_cast<unsigned long>(p);
  long mu_floor = 0;
  for (const auto& row : rep.levels)
    if (!row.zero) mu_floor = std::min(mu_floor, row.mu);

  // Stabilized elements, raising precision until every invariant is certified.
  long precision = request.precision.value_or(default_precision(request.n_max, mu_floor));
  for (int attempt = 0;; ++attempt) {
    try {
      const PAdic alpha = unit_root(Integer(a_p), up, precision);
      const StabilizedRun run = run_stabilized(phi, alpha, p, request.n_max, request.generator_exponent);
      for (int n = 0; n <= request.n_max; ++n) {
        auto& row = rep.levels[static_cast<std::size_t>(n)];
        row.stabilized_known = true;
        row.stab_mu = run.invariants[static_cast<std::size_t>(n)].mu;
        row.stab_lambda = run.invariants[static_cast<std::size_t>(n)].lambda;
        row.stab_integral = run.integral[static_cast<std::size_t>(n)];
      }
      rep.norm_relations = run.norm;
      rep.alpha = alpha.residue().str();
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionInsufficient || attempt >= 4) throw;
      rep.diagnostics.push_back("precision " + std::to_string(precision) + " insufficient; retrying");
      precision *= 2;
    }
  }
  rep.precision = precision;
  rep.norm_relation_verified =
      std::all_of(rep.norm_relations.begin(), rep.norm_relations.end(), [](const auto& r) { return r.residual_zero; });

  const auto& top = rep.levels.back();
  if (request.n_max >= 1) {
    const auto& below = rep.levels[rep.levels.size() - 2];
    rep.stabilized = top.stab_mu == below.stab_mu && top.stab_lambda == below.stab_lambda;
  }

  const auto& first = rep.levels.front();
  const bool all_integral =
      std::all_of(rep.levels.begin(), rep.levels.end(), [](const LevelRow& r) { return r.integral; });
  if (request.mode == NormalizationMode::Neron && !first.zero && first.mu < 0) {
    bool pattern = true;
    for (const auto& r : rep.levels)
      if (r.zero || r.mu != first.mu || !r.is_maximal) pattern = false;
    if (pattern) {
      rep.verdict = Verdict::CaseB;
    } else {
      rep.diagnostics.push_back("mu(theta_0) < 0 but mu is not constant or lambda is not maximal at every level");
    }
  } else if (all_integral) {
    if (request.n_max < 1) {
      rep.diagnostics.push_back("agreement with stabilized invariants needs n_max >= 1");
    } else if (!rep.stabilized) {
      rep.diagnostics.push_back("stabilized invariants differ between the top two levels");
    } else {
      bool agree = true;
      for (std::size_t i = rep.levels.size() - 2; i < rep.levels.size(); ++i) {
        const auto& r = rep.levels[i];
        if (r.zero || r.mu != r.stab_mu || r.lambda != r.stab_lambda) agree = false;
      }
      if (agree)
        rep.verdict = Verdict::CaseA;
      else
        rep.diagnostics.push_back("theta_n invariants differ from the stabilized ones at the top levels");
    }
  } else {
    rep.diagnostics.push_back("theta_n not integral although mu(theta_0) >= 0");
  }
  if (!rep.norm_relation_verified) rep.diagnostics.push_back("norm relation residual is nonzero");

  rep.boundary = boundary_congruence(coh, p);
  rep.maximality = maximality_criterion_check(coh, p, std::min(request.n_max, 2), 1);
  return rep;
}

}  // namespace mt
