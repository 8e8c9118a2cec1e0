#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mt/cache.hpp"

using namespace mt;
namespace fs = std::filesystem;

TEST_CASE("FNV-1a 64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("seal and unseal") {
  nlohmann::ordered_json payload = {{"kind", "test"}, {"value", "12"}};
  const auto sealed = seal(payload);
  CHECK(unseal(sealed.dump()).value() == payload);
  auto tampered = sealed;
  tampered["payload"]["value"] = "13";
  CHECK_FALSE(unseal(tampered.dump()).has_value());
  CHECK_FALSE(unseal("{not json").has_value());
}

TEST_CASE("space cache hit, miss and rebuild") {
  const fs::path dir = fs::temp_directory_path() / "mt-cache-test";
  fs::remove_all(dir);
  CacheStatus s;
  const auto a = cached_space(dir.string(), 26, &s);
  CHECK(s.kind == CacheStatus::Kind::Miss);
  const auto b = cached_space(dir.string(), 26, &s);
  CHECK(s.kind == CacheStatus::Kind::Hit);
  CHECK(a->basis_generators() == b->basis_generators());
  { std::ofstream(s.path, std::ios::trunc) << "{\"payload\": {}, \"checksum\": \"0\"}"; }
  const auto c = cached_space(dir.string(), 26, &s);
  CHECK(s.kind == CacheStatus::Kind::Rebuilt);
  CHECK(c->dimension() == a->dimension());
  cached_space(std::nullopt, 26, &s);
  CHECK(s.kind == CacheStatus::Kind::Disabled);
  fs::remove_all(dir);
}

TEST_CASE("eigensymbol cache round trip") {
  const fs::path dir = fs::temp_directory_path() / "mt-cache-test-eigen";
  fs::remove_all(dir);
  const CurveData e(0, -1, 1, -10, -20, 11, Rational(1, 5), "11a1");
  const auto space = cached_space(dir.string(), 11);
  CacheStatus s;
  const auto first = cached_eigensymbol(dir.string(), space, e, &s);
  CHECK(s.kind == CacheStatus::Kind::Miss);
  const auto second = cached_eigensymbol(dir.string(), space, e, &s);
  CHECK(s.kind == CacheStatus::Kind::Hit);
  CHECK(first.symbol.coords() == second.symbol.coords());
  CHECK(first.primes == second.primes);
  fs::remove_all(dir);
}
