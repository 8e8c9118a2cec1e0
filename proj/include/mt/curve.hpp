#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "mt/arith.hpp"

namespace mt {

enum class Reduction { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

const char* reduction_name(Reduction r);

/// An elliptic curve over Q given by an integral minimal Weierstrass model
///   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// together with its conductor and, optionally, L(E,1)/Omega_E.
class CurveData {
 public:
  static constexpr std::int64_t kDefaultPrimeBound = 1000000;

  CurveData(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6, std::int64_t conductor,
            std::optional<Rational> lratio = std::nullopt, std::string label = {});
  CurveData(const CurveData& other);
  CurveData& operator=(const CurveData& other);

  const Integer& a1() const { return a_[0]; }
  const Integer& a2() const { return a_[1]; }
  const Integer& a3() const { return a_[2]; }
  const Integer& a4() const { return a_[3]; }
  const Integer& a6() const { return a_[4]; }
  std::int64_t conductor() const { return conductor_; }
  const std::optional<Rational>& lratio() const { return lratio_; }
  const std::string& label() const { return label_; }

  Integer b2() const;
  Integer b4() const;
  Integer b6() const;
  Integer b8() const;
  Integer c4() const;
  Integer c6() const;
  Integer discriminant() const;

  /// Trace of Frobenius by point counting on the (possibly singular) reduction.
  /// Throws BoundExceeded above the prime bound and InvalidInput for non-primes.
  std::int64_t a_ell(std::int64_t ell) const;
  /// Number of points on the reduction mod ell, including the point at infinity.
  std::int64_t count_points(std::int64_t ell) const;
  Reduction reduction_type(std::int64_t ell) const;

  bool is_good_ordinary(std::int64_t p) const;

  void set_prime_bound(std::int64_t bound) { prime_bound_ = bound; }

 private:
  Integer a_[5];
  std::int64_t conductor_;
  std::optional<Rational> lratio_;
  std::string label_;
  std::int64_t prime_bound_ = kDefaultPrimeBound;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::int64_t, std::int64_t> cache_;
};

/// Split/nonsplit test for multiplicative reduction at odd ell via -c6 mod ell.
/// Returns +1 (split), -1 (nonsplit); only meaningful when ell | disc, ell !| c4.
int split_sign_from_c6(const CurveData& curve, std::int64_t ell);

/// Legendre symbol (a / p) for odd prime p.
int legendre(std::int64_t a, std::int64_t p);

/// Parses {a1,a2,a3,a4,a6, conductor, label?, lratio?}; integers may be JSON
/// numbers or decimal strings. Validates discriminant and conductor support.
CurveData curve_from_json(const nlohmann::json& j);
CurveData load_curve(const std::string& path);
nlohmann::ordered_json curve_to_json(const CurveData& curve);

/// Throws InvalidInput unless the model is nonsingular and its bad primes are
/// exactly the primes dividing the conductor.
void validate_curve(const CurveData& curve);

}  // namespace mt
