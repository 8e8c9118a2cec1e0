#include "mt/cusp.hpp"

#include <sstream>

#include "mt/arith.hpp"

namespace mt {

Cusp::Cusp(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) throw Error(ErrorCode::InvalidInput, "0/0 is not a cusp");
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  const std::int64_t g = gcd64(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num_ = num;
  den_ = den;
}

std::string Cusp::str() const {
  if (is_infinity()) return "oo";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Cusp& c) { return os << c.str(); }

Cusp Mat2::operator()(const Cusp& z) const {
  const __int128 x = z.num(), y = z.den();
  const __int128 top = a * x + b * y, bottom = c * x + d * y;
  if (top > INT64_MAX || top < INT64_MIN || bottom > INT64_MAX || bottom < INT64_MIN)
    throw Error(ErrorCode::InvalidInput, "cusp coordinates overflow 64 bits");
  return Cusp(static_cast<std::int64_t>(top), static_cast<std::int64_t>(bottom));
}

std::vector<std::pair<std::int64_t, std::int64_t>> manin_decomposition(const Cusp& r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (r.is_infinity()) return out;
  // Convergents p_k/q_k of the classical continued fraction, p_{-1}/q_{-1} = 1/0,
  // p_{-2}/q_{-2} = 0/1. g_k = [(-1)^{k-1} p_k, p_{k-1}; (-1)^{k-1} q_k, q_{k-1}] has
  // determinant 1 and D(g_k) = {p_{k-1}/q_{k-1}} - {p_k/q_k}; the sum telescopes.
  std::int64_t a = r.num(), b = r.den();
  std::int64_t q_prev2 = 1, q_prev = 0;  // q_{-2}, q_{-1}
  std::int64_t sign = -1;                // (-1)^{k-1} at k = 0
  while (b != 0) {
    std::int64_t quot = a / b;
    std::int64_t rem = a - quot * b;
    if (rem < 0) {
      --quot;
      rem += b;
    }
    const std::int64_t q = quot * q_prev + q_prev2;
    out.emplace_back(sign * q, q_prev);
    q_prev2 = q_prev;
    q_prev = q;
    sign = -sign;
    a = b;
    b = rem;
  }
  return out;
}

Mat2 lift_to_sl2z(std::int64_t c, std::int64_t d, std::int64_t level) {
  c = mod64(c, level);
  d = mod64(d, level);
  if (level == 1) return {1, 0, 0, 1};
  if (c == 0) c = level;
  // gcd(c, d, N) = 1 guarantees a shift d + kN coprime to c.
  std::int64_t dd = d;
  while (gcd64(c, dd) != 1) dd += level;
  const auto eg = xgcd64(dd, c);  // dd*x + c*y = 1  =>  [x -y; c dd]
  return {eg.x, -eg.y, c, dd};
}

}  // namespace mt
