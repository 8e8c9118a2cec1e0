#include <doctest.h>

#include "mt/padic.hpp"

using namespace mt;

TEST_CASE("rational valuations") {
  CHECK(valuation(Rational(1, 7), 7) == -1);
  CHECK(valuation(Rational(50), 5) == 2);
  CHECK(valuation(Rational(3, 2), 5) == 0);
  CHECK(valuation(Rational(0), 5) == kInfiniteValuation);
}

TEST_CASE("p-adic arithmetic tracks precision") {
  const PAdic x = PAdic::from_rational(Rational(1, 3), 5, 10);
  CHECK((x * PAdic::from_integer(3, 5, 10)).congruent(PAdic::from_integer(1, 5, 10)));
  const PAdic y = PAdic::from_integer(25, 5, 10);
  CHECK(y.valuation() == 2);
  const PAdic q = PAdic::from_integer(1, 5, 10) / y;
  CHECK(q.valuation() == -2);
  CHECK(q.absolute_precision() == 6);
  CHECK_THROWS_AS(PAdic(5, 4).valuation(), Error);
  CHECK_THROWS_AS(PAdic::from_integer(1, 5, 3) / PAdic::from_integer(625, 5, 3), Error);
}

TEST_CASE("unit root agrees with brute force") {
  for (int a_p : {1, 2, -3, 4}) {
    const unsigned long p = 5;
    const std::int64_t m = 625;
    std::int64_t found = -1;
    for (std::int64_t a = 1; a < m; ++a)
      if (a % 5 != 0 && mod64(a * a - a_p * a + 5, m) == 0) found = a;
    REQUIRE(found > 0);
    const PAdic alpha = unit_root(a_p, p, 4);
    CHECK(alpha.residue() == found);
    CHECK(mod(unit_root(a_p, p, 12).residue(), 625) == found);
  }
  CHECK_THROWS_AS(unit_root(5, 5, 10), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(174763));
  CHECK(!is_prime(1));
  CHECK(prime_divisors(174) == std::vector<std::int64_t>{2, 3, 29});
  CHECK(euler_phi(50) == 20);
  CHECK(mulmod64(inverse_mod64(7, 625), 7, 625) == 1);
}
