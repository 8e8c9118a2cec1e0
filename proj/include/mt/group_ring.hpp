#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mt/arith.hpp"
#include "mt/padic.hpp"

namespace mt {

/// G_n = Gal(k_n/Q), cyclic of order p^n, with generator gamma_n the image of
/// sigma_{(1+p)^k} for the generator exponent k (p !| k when n >= 1).
class GroupLevel {
 public:
  GroupLevel(std::int64_t p, int n, std::int64_t generator_exponent = 1);

  std::int64_t prime() const { return p_; }
  int level() const { return n_; }
  std::int64_t generator_exponent() const { return k_; }
  /// p^n.
  std::int64_t order() const { return order_; }
  /// p^(n+1): sigma_a for a in (Z/p^(n+1))^x surjects onto G_n.
  std::int64_t modulus() const { return modulus_; }

  /// e with sigma_a |-> gamma_n^e in G_n, for a prime to p.
  std::int64_t discrete_log(std::int64_t a) const;

  GroupLevel lower() const { return GroupLevel(p_, n_ - 1, k_); }
  GroupLevel higher() const { return GroupLevel(p_, n_ + 1, k_); }

  friend bool operator==(const GroupLevel& a, const GroupLevel& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.order_ == b.order_ && mod64(a.k_ - b.k_, std::max<std::int64_t>(a.order_, 1)) == 0;
  }

 private:
  std::int64_t p_;
  int n_;
  std::int64_t k_;
  std::int64_t order_;
  std::int64_t modulus_;
  std::int64_t k_inverse_;
  std::int64_t p_minus_1_inverse_;
};

/// Digit-by-digit log base 1+p in (1+pZ)/(1+p^(n+1)Z): x mod p^n with (1+p)^x = b.
std::int64_t log_one_plus_p(std::int64_t b, std::int64_t p, int n);

// Scalar helpers so the group-ring code is written once for Q and Q_p.
inline long scalar_valuation(const Rational& x, unsigned long p) { return valuation(x, p); }
inline long scalar_valuation(const PAdic& x, unsigned long) { return x.valuation(); }
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const PAdic& x) { return x.is_zero(); }
inline Rational scalar_times(const Rational& x, const Integer& m) { return x * Rational(m); }
inline PAdic scalar_times(const PAdic& x, const Integer& m) { return x.scaled(m); }
inline std::string scalar_string(const Rational& x) { return to_string(x); }
inline std::string scalar_string(const PAdic& x) { return to_string(x.lift()); }

/// Element of K[G_n] as coefficients on gamma_n^0 .. gamma_n^(p^n - 1).
template <class Scalar>
class GroupRingElement {
 public:
  GroupRingElement(GroupLevel level, std::vector<Scalar> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    if (static_cast<std::int64_t>(coeffs_.size()) != level_.order())
      throw Error(ErrorCode::InvalidInput, "group-ring element needs exactly p^n coefficients");
  }
  /// The zero element with every coefficient equal to `zero`.
  static GroupRingElement filled(GroupLevel level, const Scalar& zero) {
    return GroupRingElement(level, std::vector<Scalar>(static_cast<std::size_t>(level.order()), zero));
  }

  const GroupLevel& level() const { return level_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!scalar_is_zero(c)) return false;
    return true;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check_same_level(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check_same_level(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const Scalar& s, GroupRingElement a) { return a *= s; }
  friend GroupRingElement operator*(GroupRingElement a, const Scalar& s) { return a *= s; }

  /// Group-algebra product (cyclic convolution).
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_same_level(b);
    const std::size_t m = a.size();
    GroupRingElement out = filled(a.level_, a.coeffs_[0] - a.coeffs_[0]);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    return out;
  }

 private:
  void check_same_level(const GroupRingElement& o) const {
    if (!(level_ == o.level_)) throw Error(ErrorCode::InvalidInput, "group-ring elements live on different levels");
  }

  GroupLevel level_;
  std::vector<Scalar> coeffs_;
};

using RationalGroupElement = GroupRingElement<Rational>;
using PAdicGroupElement = GroupRingElement<PAdic>;

/// Coefficients a_i with F = sum a_i T^i, T = gamma_n - 1:
/// a_i = sum_j C(j, i) c_j. Horner in (1 + T) uses additions only.
template <class Scalar>
std::vector<Scalar> to_T_basis(const GroupRingElement<Scalar>& f) {
  const auto& c = f.coeffs();
  const std::size_t m = c.size();
  std::vector<Scalar> acc(m, c[0] - c[0]);
  // acc <- acc * (1 + T) + c_j, degrees stay below m.
  for (std::size_t j = m; j-- > 0;) {
    for (std::size_t i = m - 1; i > 0; --i) acc[i] += acc[i - 1];
    acc[0] += c[j];
  }
  return acc;
}

/// Inverse of to_T_basis: Horner in (gamma - 1).
template <class Scalar>
GroupRingElement<Scalar> from_T_basis(const GroupLevel& level, const std::vector<Scalar>& a) {
  const std::size_t m = a.size();
  if (static_cast<std::int64_t>(m) != level.order()) throw Error(ErrorCode::InvalidInput, "need p^n T-coefficients");
  std::vector<Scalar> acc(m, a[0] - a[0]);
  for (std::size_t i = m; i-- > 0;) {
    // acc <- acc * (gamma - 1) + a_i
    for (std::size_t j = m - 1; j > 0; --j) acc[j] = acc[j - 1] - acc[j];
    acc[0] = -acc[0];
    acc[0] += a[i];
  }
  return GroupRingElement<Scalar>(level, std::move(acc));
}

struct IwasawaInvariants {
  long mu = 0;
  std::int64_t lambda = 0;
  long normalization_shift = 0;  // ord_p of the scalar relating to cohomological mode
  friend bool operator==(const IwasawaInvariants& a, const IwasawaInvariants& b) {
    return a.mu == b.mu && a.lambda == b.lambda;
  }
};

/// (mu, lambda) from T-basis coefficients. Throws ZeroElement for 0 and
/// PrecisionInsufficient when vanishing digits leave the answer undetermined.
template <class Scalar>
IwasawaInvariants invariants_of_T_coefficients(const std::vector<Scalar>& a, unsigned long p) {
  long mu = kInfiniteValuation;
  std::int64_t lambda = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (scalar_is_zero(a[i])) continue;
    const long v = scalar_valuation(a[i], p);
    if (v < mu) {
      mu = v;
      lambda = static_cast<std::int64_t>(i);
    }
  }
  if constexpr (std::is_same_v<Scalar, PAdic>) {
    if (lambda < 0) throw Error(ErrorCode::PrecisionInsufficient, "all T-coefficients vanish to working precision");
    for (std::size_t i = 0; i < static_cast<std::size_t>(lambda); ++i)
      if (scalar_is_zero(a[i]) && a[i].absolute_precision() <= mu)
        throw Error(ErrorCode::PrecisionInsufficient, "coefficient " + std::to_string(i) + " not resolved to valuation " +
                                                          std::to_string(mu));
    for (std::size_t i = static_cast<std::size_t>(lambda); i < a.size(); ++i)
      if (scalar_is_zero(a[i]) && a[i].absolute_precision() < mu)
        throw Error(ErrorCode::PrecisionInsufficient, "coefficient " + std::to_string(i) + " not resolved to valuation " +
                                                          std::to_string(mu));
  } else {
    if (lambda < 0) throw Error(ErrorCode::ZeroElement, "invariants of the zero element");
  }
  return {mu, lambda, 0};
}

template <class Scalar>
IwasawaInvariants invariants(const GroupRingElement<Scalar>& f) {
  return invariants_of_T_coefficients(to_T_basis(f), static_cast<unsigned long>(f.level().prime()));
}

/// cor: gamma_(n-1)^i |-> sum of the p preimages gamma_n^j, j = i mod p^(n-1).
template <class Scalar>
GroupRingElement<Scalar> corestriction(const GroupRingElement<Scalar>& f) {
  const GroupLevel up = f.level().higher();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(up.order()));
  for (std::int64_t j = 0; j < up.order(); ++j) out.push_back(f[static_cast<std::size_t>(j % f.level().order())]);
  return GroupRingElement<Scalar>(up, std::move(out));
}

/// pi: gamma_n^i |-> gamma_(n-1)^(i mod p^(n-1)).
template <class Scalar>
GroupRingElement<Scalar> project(const GroupRingElement<Scalar>& f) {
  if (f.level().level() < 1) throw Error(ErrorCode::InvalidInput, "cannot project below level 0");
  const GroupLevel down = f.level().lower();
  auto out = GroupRingElement<Scalar>::filled(down, f[0] - f[0]);
  for (std::size_t i = 0; i < f.size(); ++i) out[i % static_cast<std::size_t>(down.order())] += f[i];
  return out;
}

/// The same element written on gamma' = gamma^e. Throws NotAGenerator if p | e (n >= 1).
template <class Scalar>
GroupRingElement<Scalar> with_generator(const GroupRingElement<Scalar>& f, std::int64_t e) {
  const GroupLevel& lv = f.level();
  if (lv.level() == 0) return f;
  if (mod64(e, lv.prime()) == 0)
    throw Error(ErrorCode::NotAGenerator, "gamma^" + std::to_string(e) + " does not generate G_" + std::to_string(lv.level()));
  const std::int64_t m = lv.order();
  const std::int64_t e_inv = inverse_mod64(e, m);
  const GroupLevel relabelled(lv.prime(), lv.level(), mod64(lv.generator_exponent() * e, m));
  auto out = GroupRingElement<Scalar>::filled(relabelled, f[0] - f[0]);
  for (std::int64_t i = 0; i < m; ++i) out[static_cast<std::size_t>(mulmod64(i, e_inv, m))] = f[static_cast<std::size_t>(i)];
  return out;
}

template <class Scalar>
IwasawaInvariants invariants_with_generator(const GroupRingElement<Scalar>& f, std::int64_t alternative_exponent) {
  return invariants(with_generator(f, alternative_exponent));
}

/// Outcome of checking the sum lemma on a pair.
struct SumLemmaVerdict {
  bool hypothesis_met = false;  // lambda(F1 + F2) < lambda(F1), lambda(F2)
  bool holds = true;            // conclusion verified (vacuous when hypothesis fails)
  IwasawaInvariants first, second, sum;
};

template <class Scalar>
SumLemmaVerdict sum_lemma_check(const GroupRingElement<Scalar>& f1, const GroupRingElement<Scalar>& f2) {
  SumLemmaVerdict v;
  v.sum = invariants(f1 + f2);
  v.first = invariants(f1);
  v.second = invariants(f2);
  v.hypothesis_met = v.sum.lambda < v.first.lambda && v.sum.lambda < v.second.lambda;
  if (v.hypothesis_met)
    v.holds = v.sum.mu > v.first.mu && v.first.mu == v.second.mu && v.first.lambda == v.second.lambda;
  return v;
}

nlohmann::ordered_json to_json(const RationalGroupElement& f);
nlohmann::ordered_json to_json(const PAdicGroupElement& f);
RationalGroupElement rational_group_element_from_json(const nlohmann::json& j);

/// Exact conversion into Q_p to the given absolute precision.
PAdicGroupElement to_padic(const RationalGroupElement& f, long precision);

}  // namespace mt
