#include "mt/p1.hpp"

#include "mt/arith.hpp"

namespace mt {

P1List::P1List(std::int64_t level) : level_(level) {
  if (level < 1) throw Error(ErrorCode::InvalidInput, "level must be positive");
  const std::int64_t n = level;
  table_.assign(static_cast<std::size_t>(n * n), -1);
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u <= n; ++u)
    if (gcd64(u, n) == 1) units.push_back(u % n);
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < n; ++d) {
      if (gcd64(gcd64(c, d), n) != 1) continue;
      if (table_[c * n + d] >= 0) continue;
      const auto idx = static_cast<std::int32_t>(reps_.size());
      reps_.push_back({c, d});
      for (auto u : units) table_[mulmod64(u, c, n) * n + mulmod64(u, d, n)] = idx;
    }
  }
}

std::int64_t P1List::index(std::int64_t c, std::int64_t d) const {
  const std::int64_t n = level_;
  return table_[mod64(c, n) * n + mod64(d, n)];
}

std::size_t P1List::apply_s(std::size_t i) const {
  const auto& x = reps_[i];
  return static_cast<std::size_t>(index(x.d, -x.c));
}

std::size_t P1List::apply_t(std::size_t i) const {
  const auto& x = reps_[i];
  return static_cast<std::size_t>(index(x.d, -x.c - x.d));
}

std::size_t P1List::apply_iota(std::size_t i) const {
  const auto& x = reps_[i];
  return static_cast<std::size_t>(index(-x.c, x.d));
}

}  // namespace mt
