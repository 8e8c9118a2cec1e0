#pragma once

// Exact integer/rational scalars and elementary p-adic arithmetic on them.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mt/error.hpp"

namespace mt {

namespace bmp = boost::multiprecision;

// Expression templates are off so the types behave as plain values inside Eigen.
using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

/// Stand-in for +infinity returned by valuation(0).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

inline Integer numerator(const Rational& x) { return bmp::numerator(x); }
inline Integer denominator(const Rational& x) { return bmp::denominator(x); }

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

/// ord_p of a nonzero integer; kInfiniteValuation for 0.
inline long valuation(Integer x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  long v = 0;
  const Integer pp = p;
  while (x % pp == 0) {
    x /= pp;
    ++v;
  }
  return v;
}

inline long valuation(const Rational& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(numerator(x), p) - valuation(denominator(x), p);
}

inline Integer ipow(unsigned long base, long exponent) {
  Integer r = 1;
  for (long i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Least non-negative residue.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m; throws if not invertible.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw Error(ErrorCode::InvalidInput, "element is not invertible modulo " + m.str());
  return mod(s0, m);
}

/// Image of a p-integral rational in Z/mZ (m a power of p).
inline Integer reduce_mod(const Rational& x, const Integer& m) {
  return mod(numerator(x) * inverse_mod(denominator(x), m), m);
}

inline Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "cannot parse rational '" + text + "'");
  }
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Integer& x) { return x.str(); }

// Small-integer helpers used by the level/cusp machinery.

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod64(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod64(a, m)) * mod64(b, m)) % m);
}

inline std::int64_t powmod64(std::int64_t base, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod64(base, m);
  while (e) {
    if (e & 1) r = mulmod64(r, base, m);
    base = mulmod64(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  std::int64_t g, x, y;
};

inline ExtendedGcd xgcd64(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

inline std::int64_t inverse_mod64(std::int64_t a, std::int64_t m) {
  auto [g, x, y] = xgcd64(mod64(a, m), m);
  (void)y;
  if (g != 1) throw Error(ErrorCode::InvalidInput, "element is not invertible modulo " + std::to_string(m));
  return mod64(x, m);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto q : prime_divisors(n)) r = r / q * (q - 1);
  return r;
}

inline std::int64_t ipow64(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace mt
