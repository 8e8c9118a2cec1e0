#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mt {

/// A cusp a/c in P^1(Q), reduced with c >= 0; infinity is 1/0.
class Cusp {
 public:
  Cusp() : num_(1), den_(0) {}
  Cusp(std::int64_t num, std::int64_t den);
  static Cusp infinity() { return Cusp(); }
  static Cusp integer(std::int64_t a) { return Cusp(a, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinity() const { return den_ == 0; }

  friend bool operator==(const Cusp&, const Cusp&) = default;
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Cusp& c);

/// Integer 2x2 matrix [a b; c d] acting by linear fractional transformations.
struct Mat2 {
  std::int64_t a, b, c, d;
  std::int64_t det() const { return a * d - b * c; }
  Cusp operator()(const Cusp& z) const;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

/// The degree-zero divisor {plus} - {minus}.
struct Divisor {
  Cusp plus;
  Cusp minus;
  Divisor transformed(const Mat2& g) const { return {g(plus), g(minus)}; }
};

/// {infinity} - {r}.
inline Divisor from_infinity(const Cusp& r) { return {Cusp::infinity(), r}; }

/// Manin trick: integer pairs (c_k, d_k) with {infinity} - {r} = sum_k D(c_k : d_k),
/// where D(c : d) = {g 0} - {g infinity} for g in SL2(Z) with bottom row (c, d).
std::vector<std::pair<std::int64_t, std::int64_t>> manin_decomposition(const Cusp& r);

/// A matrix in SL2(Z) whose bottom row is congruent to (c, d) modulo N up to
/// the class of (c : d) in P^1(Z/NZ); requires gcd(c, d, N) = 1.
Mat2 lift_to_sl2z(std::int64_t c, std::int64_t d, std::int64_t level);

}  // namespace mt
