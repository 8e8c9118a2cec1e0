#include "mt/cache.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mt {

namespace fs = std::filesystem;

const char* cache_status_name(CacheStatus::Kind kind) {
  switch (kind) {
    case CacheStatus::Kind::Disabled: return "disabled";
    case CacheStatus::Kind::Hit: return "hit";
    case CacheStatus::Kind::Miss: return "miss";
    case CacheStatus::Kind::Rebuilt: return "rebuilt";
  }
  return "?";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string checksum_hex(const nlohmann::ordered_json& payload) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(payload.dump())));
  return buf;
}

nlohmann::ordered_json seal(const nlohmann::ordered_json& payload) {
  nlohmann::ordered_json j;
  j["payload"] = payload;
  j["checksum"] = checksum_hex(payload);
  return j;
}

std::optional<nlohmann::ordered_json> unseal(const std::string& text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object() || !j.contains("payload") || !j.contains("checksum")) return std::nullopt;
    if (j.at("checksum").get<std::string>() != checksum_hex(j.at("payload"))) return std::nullopt;
    return j.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& option) {
  if (option && !option->empty()) return option;
  if (const char* env = std::getenv("MT_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

nlohmann::ordered_json space_to_json(const ManinSymbolSpace& space) {
  nlohmann::ordered_json j;
  j["kind"] = "relation_quotient";
  j["level"] = space.level();
  j["basis"] = space.basis_generators();
  auto exprs = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < space.generator_count(); ++g) {
    auto e = nlohmann::ordered_json::array();
    for (const auto& [i, c] : space.expression(g)) e.push_back({i, to_string(c)});
    exprs.push_back(e);
  }
  j["expressions"] = exprs;
  return j;
}

std::shared_ptr<const ManinSymbolSpace> space_from_json(const nlohmann::json& payload) {
  try {
    if (payload.at("kind").get<std::string>() != "relation_quotient") return nullptr;
    std::vector<std::size_t> basis = payload.at("basis").get<std::vector<std::size_t>>();
    std::vector<SparseExpr> exprs;
    for (const auto& e : payload.at("expressions")) {
      SparseExpr s;
      for (const auto& term : e) s.emplace_back(term.at(0).get<std::size_t>(), parse_rational(term.at(1).get<std::string>()));
      exprs.push_back(std::move(s));
    }
    return std::make_shared<const ManinSymbolSpace>(payload.at("level").get<std::int64_t>(), std::move(basis), std::move(exprs));
  } catch (const std::exception&) {
    return nullptr;
  }
}

namespace {

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write cache file " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

void set_status(CacheStatus* status, CacheStatus::Kind kind, const fs::path& path) {
  if (status) *status = {kind, path.string()};
}

}  // namespace

std::shared_ptr<const ManinSymbolSpace> cached_space(const std::optional<std::string>& dir, std::int64_t level,
                                                     CacheStatus* status) {
  if (!dir) {
    set_status(status, CacheStatus::Kind::Disabled, {});
    return build_space(level);
  }
  const fs::path path = fs::path(*dir) / ("modsym_N" + std::to_string(level) + ".json");
  auto kind = CacheStatus::Kind::Miss;
  if (const auto text = read_file(path)) {
    if (const auto payload = unseal(*text)) {
      auto space = space_from_json(*payload);
      if (space && space->level() == level) {
        set_status(status, CacheStatus::Kind::Hit, path);
        return space;
      }
    }
    kind = CacheStatus::Kind::Rebuilt;
  }
  auto space = build_space(level);
  write_file(path, seal(space_to_json(*space)).dump());
  set_status(status, kind, path);
  return space;
}

std::string curve_key(const CurveData& curve) {
  if (!curve.label().empty()) return curve.label();
  return curve.a1().str() + "_" + curve.a2().str() + "_" + curve.a3().str() + "_" + curve.a4().str() + "_" +
         curve.a6().str() + "_N" + std::to_string(curve.conductor());
}

EigensymbolResult cached_eigensymbol(const std::optional<std::string>& dir, std::shared_ptr<const ManinSymbolSpace> space,
                                     const CurveData& curve, CacheStatus* status) {
  if (!dir) {
    set_status(status, CacheStatus::Kind::Disabled, {});
    return eigensymbol(std::move(space), curve);
  }
  std::string key = curve_key(curve);
  for (auto& ch : key)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
  const fs::path path = fs::path(*dir) / ("eigensymbol_N" + std::to_string(space->level()) + "_" + key + "_plus.json");
  auto kind = CacheStatus::Kind::Miss;
  if (const auto text = read_file(path)) {
    if (const auto payload = unseal(*text)) {
      try {
        if (payload->at("level").get<std::int64_t>() == space->level() && payload->at("sign").get<std::string>() == "+" &&
            payload->at("dimension").get<std::size_t>() == space->dimension()) {
          const auto& c = payload->at("coords");
          RationalVector coords(static_cast<Eigen::Index>(c.size()));
          for (std::size_t i = 0; i < c.size(); ++i) coords(static_cast<Eigen::Index>(i)) = parse_rational(c[i].get<std::string>());
          EigensymbolResult r{RationalModularSymbol(space, coords, SymbolSign::Plus),
                              payload->at("primes").get<std::vector<std::int64_t>>()};
          set_status(status, CacheStatus::Kind::Hit, path);
          return r;
        }
      } catch (const std::exception&) {
      }
    }
    kind = CacheStatus::Kind::Rebuilt;
  }
  auto result = eigensymbol(space, curve);
  nlohmann::ordered_json payload;
  payload["kind"] = "eigensymbol";
  payload["level"] = space->level();
  payload["label"] = curve_key(curve);
  payload["sign"] = "+";
  payload["dimension"] = space->dimension();
  auto coords = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < result.symbol.coords().size(); ++i) coords.push_back(to_string(result.symbol.coords()(i)));
  payload["coords"] = coords;
  payload["primes"] = result.primes;
  write_file(path, seal(payload).dump());
  set_status(status, kind, path);
  return result;
}

}  // namespace mt
