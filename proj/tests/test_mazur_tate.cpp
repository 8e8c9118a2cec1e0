#include <doctest.h>

#include "mt/cache.hpp"
#include "mt/mazur_tate.hpp"

using namespace mt;

namespace {
RationalModularSymbol random_symbol(std::int64_t level, int salt) {
  const auto space = build_space(level);
  RationalVector v(static_cast<Eigen::Index>(space->dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Rational(static_cast<int>((i + 3) * (i + salt) % 11) - 5);
  return RationalModularSymbol(space, v);
}

CurveData curve_11a1() { return CurveData(0, -1, 1, -10, -20, 11, Rational(1, 5), "11a1"); }
}  // namespace

TEST_CASE("theta_n is the projection of vartheta_(n+1)") {
  const auto phi = random_symbol(26, 1);
  for (std::int64_t p : {3, 5})
    for (int n = 0; n <= 2; ++n) CHECK(project_raw(theta_raw(phi, p, n + 1)).coeffs() == theta(phi, p, n).coeffs());
}

TEST_CASE("theta of phi | diag(p,1) is cor theta_(n-1)") {
  const auto phi = random_symbol(37, 2);
  for (int n = 1; n <= 2; ++n)
  {
    const auto scaled = scale_action(phi, 5);
    const auto value = [&](const Cusp& r) { return scaled.from_infinity(r); };
    CHECK(theta_of(value, 5, n).coeffs() == corestriction(theta(phi, 5, n - 1)).coeffs());
  }
}

TEST_CASE("theta_0 from the Hecke relation, 11a1 at p = 3 and 7") {
  const CurveData e = curve_11a1();
  const auto coh = eigensymbol(build_space(11), e).symbol;
  for (std::int64_t p : {3, 7}) {
    const Rational a_p(e.a_ell(p));
    CHECK(theta(coh, p, 0)[0] == (a_p - 2) * coh.from_infinity(Cusp::integer(0)));
  }
}

TEST_CASE("stabilized elements: both routes and norm compatibility") {
  const CurveData e = curve_11a1();
  const auto coh = eigensymbol(build_space(11), e).symbol;
  const PAdic alpha = unit_root(e.a_ell(3), 3, 25);
  for (int n = 0; n <= 3; ++n) {
    const auto a = theta_stabilized(coh, alpha, 3, n), b = theta_stabilized_via_cor(coh, alpha, 3, n);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].congruent(b[i]));
    CHECK(check_norm_relation(coh, alpha, 3, n).residual_zero);
    if (n >= 1) {
      const auto down = project(a), lower = theta_stabilized(coh, alpha, 3, n - 1);
      for (std::size_t i = 0; i < down.size(); ++i) CHECK(down[i].congruent(alpha * lower[i]));
    }
  }
}

TEST_CASE("boundary congruence for 11a at p = 5") {
  const auto coh = eigensymbol(build_space(11), curve_11a1()).symbol;
  const auto bc = boundary_congruence(coh, 5);
  REQUIRE(bc.solvable);
  // psi(0) - psi(oo) = phi({0} - {oo}) = -phi({oo} - {0}) mod 5.
  const std::int64_t zero = bc.class_labels[0] == "0" ? 0 : 1;
  CHECK(mod64(bc.psi[static_cast<std::size_t>(zero)] + 2, 5) == 0);
  CHECK_FALSE(boundary_congruence(coh, 7).solvable);
}

TEST_CASE("mod p solver certificates") {
  IntMatrix b(3, 2);
  b << 1, 1, 1, -1, 2, 0;
  IntVector v(3);
  v << 1, 2, 4;
  auto s = solve_mod_p(b, v, 7);
  CHECK_FALSE(s.solvable);
  std::int64_t rhs = 0;
  IntVector combo = IntVector::Zero(2);
  for (const auto& eq : s.certificate) {
    combo += eq.multiplier * b.row(static_cast<Eigen::Index>(eq.row)).transpose();
    rhs += eq.multiplier * v(static_cast<Eigen::Index>(eq.row));
  }
  CHECK(mod64(combo(0), 7) == 0);
  CHECK(mod64(combo(1), 7) == 0);
  CHECK(mod64(rhs, 7) == s.certificate_rhs);
  CHECK(s.certificate_rhs != 0);
  v(2) = 3;
  s = solve_mod_p(b, v, 7);
  REQUIRE(s.solvable);
  for (Eigen::Index r = 0; r < 3; ++r) CHECK(mod64(b(r, 0) * s.solution[0] + b(r, 1) * s.solution[1] - v(r), 7) == 0);
}

TEST_CASE("maximality criterion on a congruent symbol") {
  const CurveData e(1, -1, 1, -3, 3, 26, Rational(1, 7), "26b1");
  const auto coh = eigensymbol(build_space(26), e).symbol;
  const auto v = maximality_criterion_check(coh, 7, 2, 1);
  CHECK(v.criterion_holds);
  CHECK(v.exhaustive);
  CHECK(v.m == 0);
  CHECK(v.conclusions_applicable);
  CHECK(v.conclusions_verified);
}

TEST_CASE("classifier refuses bad or supersingular primes") {
  const CurveData e = curve_11a1();
  CHECK_THROWS_AS(classify({e, 11, 1, NormalizationMode::Cohomological}), Error);
  const CurveData f(1, 1, 1, -3, 1, 50, Rational(1, 5), "50b1");
  try {
    classify({f, 5, 1, NormalizationMode::Cohomological});
    FAIL("expected NotGoodOrdinary");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotGoodOrdinary);
  }
}

TEST_CASE("default precision") { CHECK(default_precision(3, -2) == 25); }
