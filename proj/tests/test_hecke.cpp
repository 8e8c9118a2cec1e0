#include <doctest.h>

#include "mt/eigensymbol.hpp"
#include "mt/hecke.hpp"

using namespace mt;

TEST_CASE("Heilbronn and coset routes agree") {
  for (std::int64_t n : {11, 26, 37}) {
    const auto space = build_space(n);
    for (std::int64_t ell : {3, 5, 7}) {
      if (n % ell == 0) continue;
      CAPTURE(n);
      CAPTURE(ell);
      CHECK(hecke_matrix(*space, ell) == hecke_matrix_cosets(*space, ell));
    }
  }
}

TEST_CASE("Hecke operators commute") {
  const auto space = build_space(37);
  const RationalMatrix t2 = hecke_matrix(*space, 3), t5 = hecke_matrix(*space, 5);
  CHECK(RationalMatrix(t2 * t5) == RationalMatrix(t5 * t2));
}

TEST_CASE("Merel set size for prime ell") {
  // a > b >= 0, d > c >= 0, ad - bc = 2: four matrices.
  CHECK(heilbronn_merel(2).size() == 4);
  for (const auto& h : heilbronn_merel(7)) CHECK(h.det() == 7);
}

TEST_CASE("11a eigensymbol") {
  const CurveData e(0, -1, 1, -10, -20, 11, Rational(1, 5), "11a1");
  const auto space = build_space(11);
  const auto res = eigensymbol(space, e);
  const auto& phi = res.symbol;
  CHECK(phi.from_infinity(Cusp::integer(0)) > 0);
  for (std::int64_t ell : {2, 3, 7, 13}) {
    const RationalMatrix h = hecke_matrix(*space, ell);
    // (T phi)(x) = phi(T x) in coordinates: h is the functional matrix.
    CHECK(RationalVector(h * phi.coords()) == RationalVector(phi.coords() * Rational(e.a_ell(ell))));
  }
  const auto [neron, data] = normalize(phi, e, NormalizationMode::Neron);
  CHECK(neron.from_infinity(Cusp::integer(0)) == Rational(1, 5));
  CHECK(data.shift(5) == valuation(data.scalar, 5));
}

TEST_CASE("inconsistent eigenvalues are rejected") {
  const auto space = build_space(11);
  CHECK_THROWS_AS(eigensymbol_from_eigenvalues(space, {{2, 5}}), Error);
}
