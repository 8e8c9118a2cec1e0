#include <doctest.h>

#include "mt/curve.hpp"

using namespace mt;

namespace {
CurveData curve_11a1() { return CurveData(0, -1, 1, -10, -20, 11, Rational(1, 5), "11a1"); }

std::int64_t brute_count(const CurveData& e, std::int64_t q) {
  auto m = [q](const Integer& x) { return static_cast<std::int64_t>(mod(x, q)); };
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t y = 0; y < q; ++y) {
      const std::int64_t lhs = y * y + m(e.a1()) * x * y + m(e.a3()) * y;
      const std::int64_t rhs = x * x * x + m(e.a2()) * x * x + m(e.a4()) * x + m(e.a6());
      if (mod64(lhs - rhs, q) == 0) ++count;
    }
  return count;
}
}  // namespace

TEST_CASE("point counts agree with brute force") {
  const CurveData curves[] = {curve_11a1(), CurveData(1, -1, 1, -3, 3, 26), CurveData(1, 1, 1, -3, 1, 50),
                              CurveData(1, 0, 0, -1, 137, 174)};
  for (const auto& e : curves)
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 29, 31}) {
      CAPTURE(q);
      CHECK(e.count_points(q) == brute_count(e, q));
    }
}

TEST_CASE("known traces of Frobenius") {
  const CurveData e = curve_11a1();
  CHECK(e.a_ell(2) == -2);
  CHECK(e.a_ell(3) == -1);
  CHECK(e.a_ell(5) == 1);
  CHECK(e.a_ell(7) == -2);
  CHECK(e.a_ell(11) == 1);  // split multiplicative
  CHECK(e.is_good_ordinary(5));
  CHECK(!e.is_good_ordinary(11));
  CHECK_THROWS_AS(e.a_ell(9), Error);
}

TEST_CASE("split test via -c6 matches point counts") {
  const CurveData curves[] = {curve_11a1(), CurveData(1, 0, 0, -1, 137, 174)};
  for (const auto& e : curves)
    for (std::int64_t q : prime_divisors(e.conductor())) {
      if (q == 2) continue;
      CAPTURE(q);
      CHECK(split_sign_from_c6(e, q) == e.a_ell(q));
    }
}

TEST_CASE("reduction types") {
  const CurveData e(1, 1, 1, -3, 1, 50);
  CHECK(e.reduction_type(5) == Reduction::Additive);
  CHECK(e.reduction_type(3) == Reduction::Good);
  CHECK(e.a_ell(5) == 0);
}

TEST_CASE("validation and parsing") {
  CHECK_NOTHROW(validate_curve(curve_11a1()));
  CHECK_THROWS_AS(validate_curve(CurveData(0, -1, 1, -10, -20, 13)), Error);
  const auto j = nlohmann::json::parse(R"({"a1":0,"a2":"-1","a3":1,"a4":-10,"a6":-20,"conductor":11,"lratio":"1/5"})");
  const CurveData e = curve_from_json(j);
  CHECK(e.lratio() == Rational(1, 5));
  CHECK(e.discriminant() == Integer(-161051));
  CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(R"({"a1":0})")), Error);
}
