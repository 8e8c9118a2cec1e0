#pragma once

#include <cstdint>
#include <vector>

namespace mt {

/// A point (c : d) of P^1(Z/NZ), stored with 0 <= c, d < N.
struct P1Point {
  std::int64_t c = 0;
  std::int64_t d = 0;
  friend bool operator==(const P1Point&, const P1Point&) = default;
};

/// Enumeration of P^1(Z/NZ) with canonical representatives.
///
/// The representative of a class is its lexicographically smallest member
/// (c, d) under scaling by (Z/NZ)^x. Indices follow the lexicographic order of
/// the representatives.
class P1List {
 public:
  explicit P1List(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t size() const { return reps_.size(); }
  const P1Point& operator[](std::size_t i) const { return reps_[i]; }
  const std::vector<P1Point>& points() const { return reps_; }

  /// Index of the class of (c, d); -1 when gcd(c, d, N) != 1.
  std::int64_t index(std::int64_t c, std::int64_t d) const;

  // Right actions of S = [0 -1; 1 0], T = [0 -1; 1 -1] and the involution (c, d) -> (-c, d).
  std::size_t apply_s(std::size_t i) const;
  std::size_t apply_t(std::size_t i) const;
  std::size_t apply_iota(std::size_t i) const;

 private:
  std::int64_t level_;
  std::vector<P1Point> reps_;
  std::vector<std::int32_t> table_;  // N*N lookup, -1 for non-points
};

}  // namespace mt
