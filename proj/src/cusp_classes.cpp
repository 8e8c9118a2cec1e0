#include "mt/cusp_classes.hpp"

#include <algorithm>

#include "mt/arith.hpp"

namespace mt {

CuspClassTable::CuspClassTable(std::int64_t level) : level_(level) {
  if (level < 1) throw Error(ErrorCode::InvalidInput, "level must be positive");
  for (std::int64_t d = 1; d <= level; ++d) {
    if (level % d != 0) continue;
    const std::int64_t g = gcd64(d, level / d);
    for (std::int64_t x = 0; x < g || (g == 1 && x == 0); ++x) {
      if (gcd64(x, g) != 1) continue;
      Cusp rep;
      if (d == level) {
        rep = Cusp::infinity();
      } else {
        std::int64_t a = x;
        while (gcd64(a, d) != 1) a += g;
        rep = Cusp(a, d);
      }
      classes_.push_back({d, x, rep});
      if (g == 1) break;
    }
  }
}

std::size_t CuspClassTable::classify(const Cusp& cusp) const {
  const std::int64_t c = cusp.den();
  const std::int64_t d = c == 0 ? level_ : gcd64(c, level_);
  const std::int64_t g = gcd64(d, level_ / d);
  const std::int64_t x = g == 1 ? 0 : mulmod64(cusp.num(), c / d, g);
  const auto it = std::find_if(classes_.begin(), classes_.end(),
                               [&](const CuspClass& k) { return k.divisor == d && k.residue == x; });
  return static_cast<std::size_t>(it - classes_.begin());
}

std::string CuspClassTable::label(std::size_t i) const { return classes_[i].representative.str(); }

bool cusps_equivalent(const Cusp& a, const Cusp& b, std::int64_t level) {
  // p1/q1 ~ p2/q2 iff q2 s1 = q1 s2 mod gcd(q1 q2, N) where p_j s_j = 1 mod q_j.
  auto s_of = [](const Cusp& z) -> std::int64_t {
    if (z.den() == 0) return 1;
    if (z.den() == 1) return 0;
    return inverse_mod64(z.num(), z.den());
  };
  const std::int64_t q1 = a.den(), q2 = b.den();
  const std::int64_t m = gcd64(mulmod64(q1, q2, level), level);
  if (m == 1) return true;
  return mod64(mulmod64(q2, s_of(a), m) - mulmod64(q1, s_of(b), m), m) == 0;
}

}  // namespace mt
