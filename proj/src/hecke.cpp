#include "mt/hecke.hpp"

#include <future>
#include <thread>

namespace mt {

std::vector<Mat2> heilbronn_merel(std::int64_t n) {
  std::vector<Mat2> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    const std::int64_t q = n / a;
    if (q * a == n) {
      const std::int64_t d = q;
      for (std::int64_t b = 0; b < a; ++b) out.push_back({a, b, 0, d});
      for (std::int64_t c = 1; c < d; ++c) out.push_back({a, 0, c, d});
    }
    for (std::int64_t d = q + 1; d <= n; ++d) {
      const std::int64_t bc = a * d - n;
      for (std::int64_t c = bc / a + 1; c < d; ++c)
        if (bc % c == 0) out.push_back({a, bc / c, c, d});
    }
  }
  return out;
}

RationalMatrix hecke_matrix(const ManinSymbolSpace& space, std::int64_t ell) {
  const std::int64_t level = space.level();
  if (gcd64(ell, level) != 1)
    throw Error(ErrorCode::InvalidInput, "T_" + std::to_string(ell) + " via Heilbronn matrices needs ell prime to the level");
  const auto heilbronn = heilbronn_merel(ell);
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  RationalMatrix t = RationalMatrix::Zero(dim, dim);

  auto fill_rows = [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index j = begin; j < end; ++j) {
      const P1Point x = space.p1().points()[space.basis_generators()[static_cast<std::size_t>(j)]];
      for (const auto& h : heilbronn) {
        const std::int64_t c = mod64(x.c * h.a + x.d * h.c, level);
        const std::int64_t d = mod64(x.c * h.b + x.d * h.d, level);
        const auto g = space.p1().index(c, d);
        if (g < 0) continue;
        for (const auto& [i, coeff] : space.expression(static_cast<std::size_t>(g))) t(j, static_cast<Eigen::Index>(i)) += coeff;
      }
    }
  };
  const Eigen::Index workers = std::max<Eigen::Index>(1, std::min<Eigen::Index>(dim / 8, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  const Eigen::Index chunk = (dim + workers - 1) / std::max<Eigen::Index>(workers, 1);
  for (Eigen::Index b = 0; b < dim; b += chunk) jobs.push_back(std::async(std::launch::async, fill_rows, b, std::min(dim, b + chunk)));
  for (auto& job : jobs) job.get();
  return t;
}

RationalMatrix hecke_matrix_cosets(const ManinSymbolSpace& space, std::int64_t ell) {
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  RationalMatrix t = RationalMatrix::Zero(dim, dim);
  std::vector<Mat2> cosets;
  if (space.level() % ell != 0) cosets.push_back({ell, 0, 0, 1});
  for (std::int64_t u = 0; u < ell; ++u) cosets.push_back({1, u, 0, ell});
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Divisor x = space.generator_divisor(space.basis_generators()[static_cast<std::size_t>(j)]);
    for (const auto& m : cosets) t.row(j) += space.coordinates(x.transformed(m)).transpose();
  }
  return t;
}

}  // namespace mt
