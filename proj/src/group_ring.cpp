#include "mt/group_ring.hpp"

namespace mt {

std::int64_t log_one_plus_p(std::int64_t b, std::int64_t p, int n) {
  const std::int64_t modulus = ipow64(p, n + 1);
  b = mod64(b, modulus);
  if (mod64(b, p) != 1) throw Error(ErrorCode::InvalidInput, "argument is not 1 mod p");
  const std::int64_t u_inv = inverse_mod64(1 + p, modulus);
  std::int64_t x = 0, digit_weight = 1, power = p;  // power = p^(i+1)
  for (int i = 0; i < n; ++i) {
    // b = 1 + d p^(i+1) mod p^(i+2) and (1+p)^(p^i) = 1 + p^(i+1) mod p^(i+2).
    const std::int64_t d = mod64((b - 1) / power, p);
    x += d * digit_weight;
    b = mulmod64(b, powmod64(u_inv, static_cast<std::uint64_t>(d * digit_weight), modulus), modulus);
    digit_weight *= p;
    power *= p;
  }
  return x;
}

GroupLevel::GroupLevel(std::int64_t p, int n, std::int64_t generator_exponent)
    : p_(p), n_(n), k_(generator_exponent) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, "p must be an odd prime");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "level must be non-negative");
  order_ = ipow64(p, n);
  modulus_ = order_ * p;
  if (n >= 1 && mod64(k_, p) == 0)
    throw Error(ErrorCode::NotAGenerator, "generator exponent " + std::to_string(k_) + " is divisible by p");
  k_inverse_ = n >= 1 ? inverse_mod64(k_, order_) : 0;
  p_minus_1_inverse_ = n >= 1 ? inverse_mod64(p - 1, order_) : 0;
}

std::int64_t GroupLevel::discrete_log(std::int64_t a) const {
  if (mod64(a, p_) == 0) throw Error(ErrorCode::InvalidInput, "sigma_a needs a prime to p");
  if (n_ == 0) return 0;
  // a^(p-1) kills the Teichmueller part and multiplies the log by p - 1.
  const std::int64_t b = powmod64(a, static_cast<std::uint64_t>(p_ - 1), modulus_);
  const std::int64_t e = mulmod64(log_one_plus_p(b, p_, n_), p_minus_1_inverse_, order_);
  return mulmod64(e, k_inverse_, order_);
}

namespace {

template <class Scalar>
nlohmann::ordered_json element_json(const GroupRingElement<Scalar>& f) {
  nlohmann::ordered_json j;
  j["p"] = f.level().prime();
  j["n"] = f.level().level();
  j["generator_exponent"] = f.level().generator_exponent();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(scalar_string(c));
  j["coeffs"] = coeffs;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const RationalGroupElement& f) { return element_json(f); }

nlohmann::ordered_json to_json(const PAdicGroupElement& f) {
  auto j = element_json(f);
  long precision = kInfiniteValuation;
  for (const auto& c : f.coeffs()) precision = std::min(precision, c.absolute_precision());
  j["precision"] = precision;
  return j;
}

RationalGroupElement rational_group_element_from_json(const nlohmann::json& j) {
  try {
    const GroupLevel level(j.at("p").get<std::int64_t>(), j.at("n").get<int>(),
                           j.contains("generator_exponent") ? j.at("generator_exponent").get<std::int64_t>() : 1);
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return RationalGroupElement(level, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed group-ring element: ") + e.what());
  }
}

PAdicGroupElement to_padic(const RationalGroupElement& f, long precision) {
  const auto p = static_cast<unsigned long>(f.level().prime());
  std::vector<PAdic> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f.coeffs()) coeffs.push_back(PAdic::from_rational(c, p, precision));
  return PAdicGroupElement(f.level(), std::move(coeffs));
}

}  // namespace mt
