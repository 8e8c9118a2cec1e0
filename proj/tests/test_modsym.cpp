#include <doctest.h>

#include <numeric>

#include "mt/cusp_classes.hpp"
#include "mt/modular_symbol.hpp"

using namespace mt;

namespace {
std::int64_t cusp_count_formula(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += euler_phi(std::gcd(d, n / d));
  return total;
}
}  // namespace

TEST_CASE("P1(Z/N) has N prod(1 + 1/q) points") {
  CHECK(P1List(11).size() == 12);
  CHECK(P1List(26).size() == 42);
  CHECK(P1List(50).size() == 90);
}

TEST_CASE("known dimensions") {
  CHECK(build_space(11)->dimension() == 3);
  CHECK(build_space(37)->dimension() == 5);
  CHECK(level_invariants(11).genus == 1);
  CHECK(level_invariants(37).genus == 2);
  CHECK(level_invariants(26).genus == 2);
}

TEST_CASE("relation quotient matches the genus formula and a dense rank") {
  for (std::int64_t n : {1, 2, 11, 12, 26, 30, 49, 50, 64, 97, 120, 174}) {
    CAPTURE(n);
    const auto space = build_space(n);
    CHECK(static_cast<std::int64_t>(space->dimension()) == level_invariants(n).modsym_dimension());
    if (n <= 120) CHECK(space->dimension() == relation_matrix_corank(n));
  }
}

TEST_CASE("cusp classes") {
  for (std::int64_t n : {11, 26, 50, 174}) CHECK(static_cast<std::int64_t>(CuspClassTable(n).size()) == cusp_count_formula(n));
  const CuspClassTable t(26);
  CHECK(t.size() == 4);
  CHECK(t.classify(Cusp(1, 13)) == t.classify(Cusp(3, 13)));
  CHECK(t.classify(Cusp(1, 2)) != t.classify(Cusp::infinity()));
  CHECK(cusps_equivalent(Cusp(1, 26), Cusp::infinity(), 26));
}

TEST_CASE("Manin decomposition telescopes") {
  const auto space = build_space(11);
  for (auto r : {Cusp(3, 7), Cusp(-5, 13), Cusp(22, 5), Cusp(0, 1)}) {
    RationalVector sum = RationalVector::Zero(static_cast<Eigen::Index>(space->dimension()));
    for (std::size_t g : space->decompose_from_infinity(r)) sum += space->coordinates(space->generator_divisor(g));
    CHECK(sum == space->coordinates(from_infinity(r)));
  }
}

TEST_CASE("symbols respect Gamma_0(N) equivalence") {
  const auto space = build_space(26);
  RationalVector v(static_cast<Eigen::Index>(space->dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Rational(static_cast<int>(i * i + 1));
  const RationalModularSymbol phi(space, v);
  const Mat2 g{3, 1, 26 * 4, 35};  // det 1, c = 0 mod 26
  REQUIRE(g.det() == 1);
  for (auto r : {Cusp(2, 7), Cusp(1, 3)}) {
    const Divisor d{Cusp(5, 11), r};
    CHECK(phi.evaluate(d) == phi.evaluate(d.transformed(g)));
  }
}
