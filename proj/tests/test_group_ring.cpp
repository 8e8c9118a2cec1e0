#include <doctest.h>

#include <random>

#include "mt/group_ring.hpp"

using namespace mt;

namespace {
// Independent expansion: gamma^j = (1 + T)^j with Pascal's triangle.
std::vector<Rational> naive_T_basis(const RationalGroupElement& f) {
  const std::size_t m = f.size();
  std::vector<std::vector<Rational>> pascal(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j < m; ++j) {
    pascal[j][0] = 1;
    for (std::size_t i = 1; i <= j; ++i) pascal[j][i] = pascal[j - 1][i - 1] + (i < j ? pascal[j - 1][i] : Rational(0));
  }
  std::vector<Rational> a(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= j; ++i) a[i] += pascal[j][i] * f[j];
  return a;
}

RationalGroupElement random_element(std::mt19937_64& rng, const GroupLevel& lv) {
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<Rational> c(static_cast<std::size_t>(lv.order()));
  for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) & 3));
  return RationalGroupElement(lv, c);
}
}  // namespace

TEST_CASE("discrete log sends (1+p)^k to gamma") {
  for (std::int64_t p : {3, 5, 7})
    for (int n = 0; n <= 3; ++n) {
      const GroupLevel lv(p, n);
      const std::int64_t q = lv.modulus();
      CHECK(lv.discrete_log(1) == 0);
      if (n >= 1) CHECK(lv.discrete_log(1 + p) == 1);
      // Roots of unity (Teichmuller) map to the identity of G_n.
      std::int64_t w = 2;
      for (int i = 0; i < 10; ++i) w = powmod64(w, static_cast<std::uint64_t>(p), q);
      CHECK(lv.discrete_log(w) == 0);
      for (std::int64_t a = 1; a < q; a += 3)
        for (std::int64_t b = 2; b < q; b += 7)
          if (a % p && b % p)
            CHECK(lv.discrete_log(mulmod64(a, b, q)) == mod64(lv.discrete_log(a) + lv.discrete_log(b), lv.order()));
    }
  CHECK(log_one_plus_p(powmod64(6, 17, 625), 5, 3) == 17);
}

TEST_CASE("T-basis agrees with the binomial oracle and round-trips") {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {3, 5})
    for (int n = 0; n <= 2; ++n) {
      const GroupLevel lv(p, n);
      for (int k = 0; k < 20; ++k) {
        const auto f = random_element(rng, lv);
        CHECK(to_T_basis(f) == naive_T_basis(f));
        CHECK(from_T_basis(lv, to_T_basis(f)).coeffs() == f.coeffs());
      }
    }
}

TEST_CASE("invariants of explicit elements") {
  const GroupLevel lv(5, 1);
  // The norm element sum gamma^i = ((1+T)^5 - 1)/T has lambda 4 and mu 0.
  const auto norm = RationalGroupElement(lv, std::vector<Rational>(5, Rational(1)));
  CHECK(invariants(norm) == IwasawaInvariants{0, 4, 0});
  auto f = RationalGroupElement::filled(lv, Rational(0));
  f[0] = Rational(1, 25);
  CHECK(invariants(f) == IwasawaInvariants{-2, 0, 0});
  f[0] = Rational(5);
  f[1] = Rational(-5);  // -5T
  CHECK(invariants(f) == IwasawaInvariants{1, 1, 0});
  CHECK_THROWS_AS(invariants(RationalGroupElement::filled(lv, Rational(0))), Error);
}

TEST_CASE("corestriction and projection") {
  std::mt19937_64 rng(5);
  const GroupLevel lv(3, 2);
  for (int k = 0; k < 30; ++k) {
    auto f = random_element(rng, lv);
    if (f.is_zero()) continue;
    const auto up = corestriction(f);
    CHECK(up.level().level() == 3);
    CHECK(project(up).coeffs() == (f * Rational(3)).coeffs());
    const auto a = invariants(f), b = invariants(up);
    CHECK(b.mu == a.mu);
    CHECK(b.lambda == a.lambda + 27 - 9);
  }
}

TEST_CASE("invariants do not depend on the generator") {
  std::mt19937_64 rng(9);
  const GroupLevel lv(5, 2);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_element(rng, lv);
    if (f.is_zero()) continue;
    for (std::int64_t e : {2, 3, 7, 24}) CHECK(invariants_with_generator(f, e) == invariants(f));
  }
  CHECK_THROWS_AS(with_generator(random_element(rng, lv), 10), Error);
  CHECK_THROWS_AS(GroupLevel(5, 1, 5), Error);
}

TEST_CASE("p-adic entries refuse undetermined invariants") {
  const GroupLevel lv(5, 1);
  auto f = PAdicGroupElement::filled(lv, PAdic(5, 3));
  CHECK_THROWS_AS(invariants(f), Error);
  f[1] = PAdic::from_integer(2, 5, 3);
  CHECK(invariants(f).mu == 0);
}

TEST_CASE("json round trip keeps exact strings") {
  const GroupLevel lv(3, 1);
  const RationalGroupElement f(lv, {Rational(1, 3), Rational(-2), Rational(0)});
  const auto j = to_json(f);
  CHECK(rational_group_element_from_json(nlohmann::json::parse(j.dump())).coeffs() == f.coeffs());
}
