#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mt/cusp.hpp"

namespace mt {

/// Gamma_0(N)-classes of cusps.
///
/// The cusp a/c (lowest terms, c >= 0) with d = gcd(c, N) lies in the class
/// labelled (d, a * (c/d) mod gcd(d, N/d)); the label is invariant under
/// Gamma_0(N) and the labels are in bijection with the classes.
class CuspClassTable {
 public:
  struct CuspClass {
    std::int64_t divisor;  // d = gcd(c, N)
    std::int64_t residue;  // a * (c/d) mod gcd(d, N/d)
    Cusp representative;
  };

  explicit CuspClassTable(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<CuspClass>& classes() const { return classes_; }
  const CuspClass& operator[](std::size_t i) const { return classes_[i]; }

  std::size_t classify(const Cusp& cusp) const;
  std::string label(std::size_t i) const;

 private:
  std::int64_t level_;
  std::vector<CuspClass> classes_;
};

inline CuspClassTable cusp_classes(std::int64_t level) { return CuspClassTable(level); }

/// Cremona's pairwise test for Gamma_0(N)-equivalence of two cusps.
bool cusps_equivalent(const Cusp& a, const Cusp& b, std::int64_t level);

}  // namespace mt
