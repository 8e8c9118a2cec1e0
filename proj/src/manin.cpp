#include "mt/manin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mt {

namespace {

int kronecker_minus(std::int64_t a, std::int64_t q) {
  // (a/q) for an odd prime q via Euler's criterion.
  const std::int64_t r = powmod64(mod64(a, q), (q - 1) / 2, q);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

using SparseRow = std::map<std::size_t, Rational>;

std::size_t weight(const Rational& x) {
  return bmp::msb(bmp::abs(numerator(x))) + bmp::msb(denominator(x));
}

}  // namespace

LevelInvariants level_invariants(std::int64_t level) {
  LevelInvariants out;
  const auto primes = prime_divisors(level);
  out.index = level;
  for (auto q : primes) out.index = out.index / q * (q + 1);
  out.nu2 = (level % 4 == 0) ? 0 : 1;
  out.nu3 = (level % 9 == 0) ? 0 : 1;
  for (auto q : primes) {
    if (out.nu2) {
      if (q == 2)
        out.nu2 *= 1;
      else
        out.nu2 *= 1 + kronecker_minus(-1, q);
    }
    if (out.nu3) {
      if (q == 3)
        out.nu3 *= 1;
      else if (q == 2)
        out.nu3 *= 1 + (-1);  // (-3/2) = -1
      else
        out.nu3 *= 1 + kronecker_minus(-3, q);
    }
  }
  for (std::int64_t d = 1; d <= level; ++d)
    if (level % d == 0) out.cusps += euler_phi(gcd64(d, level / d));
  // g = 1 + index/12 - nu2/4 - nu3/3 - cusps/2, computed over 12.
  out.genus = (12 + out.index - 3 * out.nu2 - 4 * out.nu3 - 6 * out.cusps) / 12;
  return out;
}

ManinSymbolSpace::ManinSymbolSpace(std::int64_t level, std::vector<std::size_t> basis,
                                   std::vector<SparseExpr> expressions)
    : p1_(level), basis_(std::move(basis)), expressions_(std::move(expressions)) {
  if (expressions_.size() != p1_.size())
    throw Error(ErrorCode::InvalidInput, "expression table does not match P^1(Z/NZ)");
  for (const auto& e : expressions_)
    for (const auto& [i, c] : e)
      if (i >= basis_.size()) throw Error(ErrorCode::InvalidInput, "expression refers to a missing basis element");
}

std::size_t ManinSymbolSpace::generator_index(std::int64_t c, std::int64_t d) const {
  const auto idx = p1_.index(c, d);
  if (idx < 0) throw Error(ErrorCode::InvalidInput, "(c : d) is not a point of P^1(Z/NZ)");
  return static_cast<std::size_t>(idx);
}

Divisor ManinSymbolSpace::generator_divisor(std::size_t generator) const {
  const auto& x = p1_[generator];
  const Mat2 g = lift_to_sl2z(x.c, x.d, level());
  return {g(Cusp::integer(0)), g(Cusp::infinity())};
}

std::vector<std::size_t> ManinSymbolSpace::decompose_from_infinity(const Cusp& r) const {
  std::vector<std::size_t> out;
  for (const auto& [c, d] : manin_decomposition(r)) out.push_back(generator_index(c, d));
  return out;
}

RationalVector ManinSymbolSpace::coordinates(const Divisor& divisor) const {
  // {r} - {s} = ({oo} - {s}) - ({oo} - {r})
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(dimension()));
  for (auto g : decompose_from_infinity(divisor.minus))
    for (const auto& [i, c] : expressions_[g]) v(static_cast<Eigen::Index>(i)) += c;
  for (auto g : decompose_from_infinity(divisor.plus))
    for (const auto& [i, c] : expressions_[g]) v(static_cast<Eigen::Index>(i)) -= c;
  return v;
}

RationalMatrix ManinSymbolSpace::involution_matrix() const {
  const auto n = static_cast<Eigen::Index>(dimension());
  RationalMatrix j = RationalMatrix::Zero(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    const auto image = p1_.apply_iota(basis_[static_cast<std::size_t>(row)]);
    for (const auto& [i, c] : expressions_[image]) j(row, static_cast<Eigen::Index>(i)) += c;
  }
  return j;
}

std::shared_ptr<const ManinSymbolSpace> build_space(std::int64_t level, std::int64_t level_bound) {
  if (level < 1) throw Error(ErrorCode::InvalidInput, "level must be positive");
  if (level > level_bound)
    throw Error(ErrorCode::LevelTooLarge,
                "level " + std::to_string(level) + " exceeds the configured bound " + std::to_string(level_bound));
  const P1List p1(level);
  const std::size_t count = p1.size();

  // Two-term relations x = -xS: each generator becomes +-(a free symbol) or 0.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rep(count, kNone);
  std::vector<int> sign(count, 0);
  std::vector<std::size_t> free_symbols;  // generator index of each 2-term class
  for (std::size_t x = 0; x < count; ++x) {
    if (rep[x] != kNone || sign[x] != 0) continue;
    const std::size_t y = p1.apply_s(x);
    if (y == x) {
      rep[x] = count;  // x = -x, so x = 0 over Q
      continue;
    }
    const std::size_t id = free_symbols.size();
    free_symbols.push_back(x);
    rep[x] = id;
    sign[x] = 1;
    rep[y] = id;
    sign[y] = -1;
  }

  // Three-term relations on the 2-term classes; kept in reduced echelon form.
  std::map<std::size_t, SparseRow> pivot_rows;  // pivot column -> row with coefficient 1 there
  std::vector<bool> seen(count, false);
  for (std::size_t x = 0; x < count; ++x) {
    if (seen[x]) continue;
    const std::size_t xt = p1.apply_t(x);
    const std::size_t xtt = p1.apply_t(xt);
    seen[x] = seen[xt] = seen[xtt] = true;
    SparseRow row;
    for (auto g : {x, xt, xtt}) {
      if (rep[g] == count) continue;
      row[rep[g]] += Rational(sign[g]);
    }
    for (auto it = row.begin(); it != row.end();) it = (it->second == 0) ? row.erase(it) : std::next(it);
    // Reduce against the current pivots; pivot rows only carry free columns besides their pivot.
    SparseRow reduced = row;
    for (const auto& [col, coeff] : row) {
      auto pr = pivot_rows.find(col);
      if (pr == pivot_rows.end()) continue;
      for (const auto& [c2, v2] : pr->second) reduced[c2] -= coeff * v2;
    }
    for (auto it = reduced.begin(); it != reduced.end();) it = (it->second == 0) ? reduced.erase(it) : std::next(it);
    if (reduced.empty()) continue;
    auto best = reduced.begin();
    for (auto it = reduced.begin(); it != reduced.end(); ++it)
      if (weight(it->second) < weight(best->second)) best = it;
    const std::size_t pcol = best->first;
    const Rational inv = Rational(1) / best->second;
    for (auto& [c, v] : reduced) v *= inv;
    for (auto& [pc, prow] : pivot_rows) {
      auto hit = prow.find(pcol);
      if (hit == prow.end()) continue;
      const Rational f = hit->second;
      for (const auto& [c, v] : reduced) prow[c] -= f * v;
      for (auto it = prow.begin(); it != prow.end();) it = (it->second == 0) ? prow.erase(it) : std::next(it);
    }
    pivot_rows.emplace(pcol, std::move(reduced));
  }

  // Free 2-term classes that are not pivots form the basis.
  std::vector<std::size_t> basis_of_class(free_symbols.size(), kNone);
  std::vector<std::size_t> basis;
  for (std::size_t k = 0; k < free_symbols.size(); ++k) {
    if (pivot_rows.count(k)) continue;
    basis_of_class[k] = basis.size();
    basis.push_back(free_symbols[k]);
  }
  std::vector<SparseExpr> class_expr(free_symbols.size());
  for (std::size_t k = 0; k < free_symbols.size(); ++k) {
    if (basis_of_class[k] != kNone) {
      class_expr[k] = {{basis_of_class[k], Rational(1)}};
      continue;
    }
    SparseExpr e;
    for (const auto& [c, v] : pivot_rows.at(k))
      if (c != k) e.emplace_back(basis_of_class[c], -v);
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    class_expr[k] = std::move(e);
  }
  std::vector<SparseExpr> expressions(count);
  for (std::size_t x = 0; x < count; ++x) {
    if (rep[x] == count) continue;
    expressions[x] = class_expr[rep[x]];
    if (sign[x] < 0)
      for (auto& [i, c] : expressions[x]) c = -c;
  }
  return std::make_shared<const ManinSymbolSpace>(level, std::move(basis), std::move(expressions));
}

std::size_t relation_matrix_corank(std::int64_t level) {
  const P1List p1(level);
  const auto n = static_cast<Eigen::Index>(p1.size());
  std::vector<std::vector<std::pair<std::size_t, int>>> rels;
  for (std::size_t x = 0; x < p1.size(); ++x) {
    rels.push_back({{x, 1}, {p1.apply_s(x), 1}});
    const auto xt = p1.apply_t(x);
    rels.push_back({{x, 1}, {xt, 1}, {p1.apply_t(xt), 1}});
  }
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(rels.size()), n);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [c, v] : rels[r]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
  return static_cast<std::size_t>(n - rank(m));
}

}  // namespace mt
