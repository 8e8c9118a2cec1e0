#pragma once

#include <ostream>
#include <string>

#include "mt/arith.hpp"

namespace mt {

/// An element of Q_p known modulo p^absolute_precision.
///
/// Stored as p^valuation * unit with unit known modulo p^(absolute - valuation).
/// An element whose digits all vanish up to its precision has unknown valuation
/// (at least its absolute precision); is_zero() reports that state and
/// valuation() refuses to answer for it.
class PAdic {
 public:
  /// The zero element known to absolute precision `absolute_precision`.
  PAdic(unsigned long p, long absolute_precision);

  static PAdic from_rational(const Rational& x, unsigned long p, long absolute_precision);
  static PAdic from_integer(const Integer& x, unsigned long p, long absolute_precision);

  unsigned long prime() const { return p_; }
  long absolute_precision() const { return absolute_; }
  long relative_precision() const { return is_zero() ? 0 : absolute_ - valuation_; }
  bool is_zero() const { return unit_ == 0; }

  /// Certified valuation; throws PrecisionInsufficient when is_zero().
  long valuation() const;
  /// Lower bound for the valuation: exact when nonzero, the precision otherwise.
  long valuation_lower_bound() const { return is_zero() ? absolute_ : valuation_; }

  const Integer& unit() const { return unit_; }
  /// x mod p^absolute_precision; requires valuation >= 0.
  Integer residue() const;
  /// The rational p^valuation * unit (a representative of the class).
  Rational lift() const;

  PAdic with_precision(long absolute_precision) const;

  PAdic operator-() const;
  PAdic& operator+=(const PAdic& other);
  PAdic& operator-=(const PAdic& other);
  PAdic& operator*=(const PAdic& other);
  /// Throws PrecisionInsufficient if `other` is zero to its precision or the
  /// quotient would carry no certified digits.
  PAdic& operator/=(const PAdic& other);

  friend PAdic operator+(PAdic a, const PAdic& b) { return a += b; }
  friend PAdic operator-(PAdic a, const PAdic& b) { return a -= b; }
  friend PAdic operator*(PAdic a, const PAdic& b) { return a *= b; }
  friend PAdic operator/(PAdic a, const PAdic& b) { return a /= b; }

  /// Exact integer multiple (binomial-transform coefficients); no precision loss
  /// beyond the valuation gain of the factor.
  PAdic scaled(const Integer& factor) const;

  /// Equality of the common certified digits.
  bool congruent(const PAdic& other) const { return (*this - other).is_zero(); }

  std::string str() const;

 private:
  void normalize();

  unsigned long p_;
  long absolute_;
  long valuation_ = 0;
  Integer unit_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PAdic& x);

inline long valuation(const PAdic& x, unsigned long) { return x.valuation(); }

/// The unit root of x^2 - a_p x + p in Z_p, to absolute precision M.
/// Throws NotOrdinary when p | a_p.
PAdic unit_root(const Integer& a_p, unsigned long p, long precision);

}  // namespace mt
