#include "mt/padic.hpp"

#include <algorithm>
#include <sstream>

namespace mt {

namespace {

Integer prime_power(unsigned long p, long e) { return e <= 0 ? Integer(1) : ipow(p, e); }

}  // namespace

PAdic::PAdic(unsigned long p, long absolute_precision) : p_(p), absolute_(absolute_precision) {
  valuation_ = absolute_;
}

PAdic PAdic::from_integer(const Integer& x, unsigned long p, long absolute_precision) {
  return from_rational(Rational(x), p, absolute_precision);
}

PAdic PAdic::from_rational(const Rational& x, unsigned long p, long absolute_precision) {
  PAdic r(p, absolute_precision);
  if (x == 0) return r;
  const long v = mt::valuation(x, p);
  if (v >= absolute_precision) return r;
  Integer num = numerator(x), den = denominator(x);
  const Integer pp = p;
  if (v > 0)
    for (long i = 0; i < v; ++i) num /= pp;
  else
    for (long i = 0; i < -v; ++i) den /= pp;
  const Integer modulus = prime_power(p, absolute_precision - v);
  r.valuation_ = v;
  r.unit_ = mod(num * inverse_mod(den, modulus), modulus);
  return r;
}

long PAdic::valuation() const {
  if (is_zero())
    throw Error(ErrorCode::PrecisionInsufficient,
                "valuation of an element that vanishes to precision " + std::to_string(absolute_));
  return valuation_;
}

Integer PAdic::residue() const {
  if (is_zero()) return 0;
  if (valuation_ < 0)
    throw Error(ErrorCode::InvalidInput, "residue of a non-integral p-adic number");
  return unit_ * prime_power(p_, valuation_);
}

Rational PAdic::lift() const {
  if (is_zero()) return 0;
  if (valuation_ >= 0) return Rational(unit_ * prime_power(p_, valuation_));
  return Rational(unit_, prime_power(p_, -valuation_));
}

PAdic PAdic::with_precision(long absolute_precision) const {
  PAdic r = *this;
  r.absolute_ = std::min(absolute_, absolute_precision);
  r.normalize();
  return r;
}

void PAdic::normalize() {
  if (unit_ == 0 || valuation_ >= absolute_) {
    unit_ = 0;
    valuation_ = absolute_;
    return;
  }
  const Integer pp = p_;
  while (unit_ % pp == 0) {
    unit_ /= pp;
    ++valuation_;
    if (valuation_ >= absolute_) {
      unit_ = 0;
      valuation_ = absolute_;
      return;
    }
  }
  const Integer modulus = prime_power(p_, absolute_ - valuation_);
  unit_ = mod(unit_, modulus);
}

PAdic PAdic::operator-() const {
  PAdic r = *this;
  r.unit_ = -r.unit_;
  r.normalize();
  return r;
}

PAdic& PAdic::operator+=(const PAdic& other) {
  if (other.p_ != p_) throw Error(ErrorCode::InvalidInput, "p-adic numbers over different primes");
  const long prec = std::min(absolute_, other.absolute_);
  if (other.is_zero()) {
    absolute_ = prec;
    normalize();
    return *this;
  }
  if (is_zero()) {
    *this = other;
    absolute_ = prec;
    normalize();
    return *this;
  }
  const long v0 = std::min(valuation_, other.valuation_);
  if (v0 >= prec) {
    *this = PAdic(p_, prec);
    return *this;
  }
  Integer sum = unit_ * prime_power(p_, valuation_ - v0) + other.unit_ * prime_power(p_, other.valuation_ - v0);
  unit_ = std::move(sum);
  valuation_ = v0;
  absolute_ = prec;
  normalize();
  return *this;
}

PAdic& PAdic::operator-=(const PAdic& other) { return *this += -other; }

PAdic& PAdic::operator*=(const PAdic& other) {
  if (other.p_ != p_) throw Error(ErrorCode::InvalidInput, "p-adic numbers over different primes");
  const long prec = std::min(absolute_ + other.valuation_lower_bound(), other.absolute_ + valuation_lower_bound());
  if (is_zero() || other.is_zero()) {
    *this = PAdic(p_, prec);
    return *this;
  }
  unit_ *= other.unit_;
  valuation_ += other.valuation_;
  absolute_ = prec;
  normalize();
  return *this;
}

PAdic& PAdic::operator/=(const PAdic& other) {
  if (other.p_ != p_) throw Error(ErrorCode::InvalidInput, "p-adic numbers over different primes");
  if (other.is_zero()) throw Error(ErrorCode::PrecisionInsufficient, "division by a p-adic number that vanishes to precision");
  const long shift = other.valuation_;
  long prec = absolute_ - shift;
  if (!is_zero()) prec = std::min(prec, valuation_ - shift + other.relative_precision());
  if (prec <= 0) throw Error(ErrorCode::PrecisionInsufficient, "quotient carries no certified digits");
  if (is_zero()) {
    *this = PAdic(p_, prec);
    return *this;
  }
  const Integer modulus = prime_power(p_, prec - (valuation_ - shift));
  unit_ = mod(unit_ * inverse_mod(other.unit_, modulus), modulus);
  valuation_ -= shift;
  absolute_ = prec;
  normalize();
  return *this;
}

PAdic PAdic::scaled(const Integer& factor) const {
  if (factor == 0) return PAdic(p_, absolute_);
  const long vf = mt::valuation(factor, p_);
  PAdic r = *this;
  r.absolute_ += vf;
  if (is_zero()) {
    r.valuation_ = r.absolute_;
    return r;
  }
  r.unit_ *= factor / prime_power(p_, vf);
  r.valuation_ += vf;
  r.normalize();
  return r;
}

std::string PAdic::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(" << p_ << "^" << absolute_ << ")";
    return os.str();
  }
  os << unit_.str();
  if (valuation_ != 0) os << "*" << p_ << "^" << valuation_;
  os << " + O(" << p_ << "^" << absolute_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdic& x) { return os << x.str(); }

PAdic unit_root(const Integer& a_p, unsigned long p, long precision) {
  if (precision <= 0) throw Error(ErrorCode::InvalidInput, "precision must be positive");
  const Integer pp = p;
  if (mod(a_p, pp) == 0)
    throw Error(ErrorCode::NotOrdinary, "a_p = " + a_p.str() + " is divisible by p = " + std::to_string(p));
  // Newton iteration on f(x) = x^2 - a_p x + p from x = a_p mod p; f'(x) = 2x - a_p is a unit.
  Integer x = mod(a_p, pp);
  long known = 1;
  while (known < precision) {
    known = std::min(2 * known, precision);
    const Integer m = ipow(p, known);
    const Integer f = mod(x * x - a_p * x + pp, m);
    const Integer df = mod(2 * x - a_p, m);
    x = mod(x - f * inverse_mod(df, m), m);
  }
  return PAdic::from_integer(x, p, precision);
}

}  // namespace mt
