#include "mt/curve.hpp"

#include <cmath>
#include <fstream>

namespace mt {

const char* reduction_name(Reduction r) {
  switch (r) {
    case Reduction::Good: return "good";
    case Reduction::SplitMultiplicative: return "split multiplicative";
    case Reduction::NonsplitMultiplicative: return "nonsplit multiplicative";
    case Reduction::Additive: return "additive";
  }
  return "?";
}

CurveData::CurveData(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6, std::int64_t conductor,
                     std::optional<Rational> lratio, std::string label)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      conductor_(conductor),
      lratio_(std::move(lratio)),
      label_(std::move(label)) {
  if (conductor_ < 1) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
  if (discriminant() == 0) throw Error(ErrorCode::InvalidInput, "singular Weierstrass model");
}

CurveData::CurveData(const CurveData& other)
    : conductor_(other.conductor_), lratio_(other.lratio_), label_(other.label_), prime_bound_(other.prime_bound_) {
  for (int i = 0; i < 5; ++i) a_[i] = other.a_[i];
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  cache_ = other.cache_;
}

CurveData& CurveData::operator=(const CurveData& other) {
  if (this == &other) return *this;
  for (int i = 0; i < 5; ++i) a_[i] = other.a_[i];
  conductor_ = other.conductor_;
  lratio_ = other.lratio_;
  label_ = other.label_;
  prime_bound_ = other.prime_bound_;
  std::map<std::int64_t, std::int64_t> copy;
  {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    copy = other.cache_;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_ = std::move(copy);
  return *this;
}

Integer CurveData::b2() const { return a1() * a1() + 4 * a2(); }
Integer CurveData::b4() const { return a1() * a3() + 2 * a4(); }
Integer CurveData::b6() const { return a3() * a3() + 4 * a6(); }
Integer CurveData::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}
Integer CurveData::c4() const { return b2() * b2() - 24 * b4(); }
Integer CurveData::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
Integer CurveData::discriminant() const {
  return -b2() * b2() * b8() - 8 * b4() * b4() * b4() - 27 * b6() * b6() + 9 * b2() * b4() * b6();
}

int legendre(std::int64_t a, std::int64_t p) {
  a = mod64(a, p);
  if (a == 0) return 0;
  return powmod64(a, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

static std::int64_t residue(const Integer& x, std::int64_t m) {
  return static_cast<std::int64_t>(mod(x, Integer(m)));
}

std::int64_t CurveData::count_points(std::int64_t ell) const {
  const std::int64_t a1r = residue(a1(), ell), a2r = residue(a2(), ell), a3r = residue(a3(), ell),
                     a4r = residue(a4(), ell), a6r = residue(a6(), ell);
  std::int64_t count = 1;  // point at infinity
  if (ell == 2) {
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y)
        if (mod64(y * y + a1r * x * y + a3r * y - (x * x * x + a2r * x * x + a4r * x + a6r), 2) == 0) ++count;
    return count;
  }
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  const std::int64_t b2r = residue(b2(), ell), b4r = residue(b4(), ell), b6r = residue(b6(), ell);
  for (std::int64_t x = 0; x < ell; ++x) {
    std::int64_t rhs = mulmod64(4, powmod64(x, 3, ell), ell);
    rhs = mod64(rhs + mulmod64(b2r, mulmod64(x, x, ell), ell), ell);
    rhs = mod64(rhs + mulmod64(2 * b4r, x, ell), ell);
    rhs = mod64(rhs + b6r, ell);
    count += 1 + legendre(rhs, ell);
  }
  return count;
}

std::int64_t CurveData::a_ell(std::int64_t ell) const {
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidInput, std::to_string(ell) + " is not prime");
  if (ell > prime_bound_)
    throw Error(ErrorCode::BoundExceeded, "prime " + std::to_string(ell) + " exceeds bound " + std::to_string(prime_bound_));
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(ell); it != cache_.end()) return it->second;
  }
  const std::int64_t a = ell + 1 - count_points(ell);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(ell, a);
  return a;
}

Reduction CurveData::reduction_type(std::int64_t ell) const {
  const Integer l = ell;
  if (discriminant() % l != 0) return Reduction::Good;
  if (c4() % l == 0) return Reduction::Additive;
  return a_ell(ell) == 1 ? Reduction::SplitMultiplicative : Reduction::NonsplitMultiplicative;
}

bool CurveData::is_good_ordinary(std::int64_t p) const {
  return reduction_type(p) == Reduction::Good && mod64(a_ell(p), p) != 0;
}

int split_sign_from_c6(const CurveData& curve, std::int64_t ell) {
  return legendre(-residue(curve.c6(), ell), ell);
}

void validate_curve(const CurveData& curve) {
  const Integer disc = curve.discriminant();
  const std::int64_t n = curve.conductor();
  for (auto q : prime_divisors(n))
    if (disc % Integer(q) != 0)
      throw Error(ErrorCode::InvalidInput,
                  "conductor " + std::to_string(n) + " has prime " + std::to_string(q) + " of good reduction");
  Integer rest = bmp::abs(disc);
  for (auto q : prime_divisors(n))
    while (rest % q == 0) rest /= q;
  if (rest != 1)
    throw Error(ErrorCode::InvalidInput, "discriminant " + disc.str() + " has bad primes not dividing the conductor " +
                                             std::to_string(n) + " (model not minimal or wrong conductor)");
  // Exponent of the conductor: 1 at multiplicative primes, >= 2 at additive ones.
  for (auto q : prime_divisors(n)) {
    std::int64_t e = 0;
    for (std::int64_t m = n; m % q == 0; m /= q) ++e;
    const bool multiplicative = curve.c4() % Integer(q) != 0;
    if (multiplicative != (e == 1))
      throw Error(ErrorCode::InvalidInput, "conductor exponent at " + std::to_string(q) + " inconsistent with the model");
  }
}

static Integer json_integer(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("curve record lacks '") + key + "'");
  const auto& v = j.at(key);
  try {
    if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
    if (v.is_string()) return Integer(v.get<std::string>());
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' is not an integer");
}

CurveData curve_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "curve record must be a JSON object");
  const Integer n = json_integer(j, "conductor");
  if (n < 1 || n > Integer(std::numeric_limits<std::int32_t>::max()))
    throw Error(ErrorCode::InvalidInput, "conductor out of range");
  std::optional<Rational> lratio;
  if (j.contains("lratio") && !j.at("lratio").is_null()) {
    const auto& v = j.at("lratio");
    if (v.is_string()) lratio = parse_rational(v.get<std::string>());
    else if (v.is_number_integer()) lratio = Rational(v.get<std::int64_t>());
    else throw Error(ErrorCode::InvalidInput, "lratio must be a \"num/den\" string");
  }
  std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  CurveData curve(json_integer(j, "a1"), json_integer(j, "a2"), json_integer(j, "a3"), json_integer(j, "a4"),
                  json_integer(j, "a6"), static_cast<std::int64_t>(n), lratio, label);
  validate_curve(curve);
  return curve;
}

CurveData load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open curve file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "malformed curve file " + path + ": " + e.what());
  }
  return curve_from_json(j);
}

nlohmann::ordered_json curve_to_json(const CurveData& curve) {
  nlohmann::ordered_json j;
  if (!curve.label().empty()) j["label"] = curve.label();
  j["a1"] = curve.a1().str();
  j["a2"] = curve.a2().str();
  j["a3"] = curve.a3().str();
  j["a4"] = curve.a4().str();
  j["a6"] = curve.a6().str();
  j["conductor"] = std::to_string(curve.conductor());
  if (curve.lratio()) j["lratio"] = to_string(*curve.lratio());
  return j;
}

}  // namespace mt
