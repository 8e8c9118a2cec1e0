#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "mt/curve.hpp"
#include "mt/eigensymbol.hpp"
#include "mt/manin.hpp"

namespace mt {

/// On-disk JSON cache of relation quotients and eigensymbols.
///
/// Every file is an object {"payload": {...}, "checksum": "<16 hex digits>"} where
/// the checksum is FNV-1a 64 of payload.dump(). Exact numbers are decimal strings.
/// Unreadable files or checksum mismatches are reported and rebuilt.
struct CacheStatus {
  enum class Kind { Disabled, Hit, Miss, Rebuilt };
  Kind kind = Kind::Disabled;
  std::string path;
};

const char* cache_status_name(CacheStatus::Kind kind);

std::uint64_t fnv1a64(const std::string& bytes);
std::string checksum_hex(const nlohmann::ordered_json& payload);

/// The cache directory: the explicit option, else $MT_CACHE_DIR, else none.
std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& option);

nlohmann::ordered_json space_to_json(const ManinSymbolSpace& space);
std::shared_ptr<const ManinSymbolSpace> space_from_json(const nlohmann::json& payload);

std::shared_ptr<const ManinSymbolSpace> cached_space(const std::optional<std::string>& dir, std::int64_t level,
                                                     CacheStatus* status = nullptr);

/// Cache key for a curve: its label, or the coefficient string when unlabelled.
std::string curve_key(const CurveData& curve);

EigensymbolResult cached_eigensymbol(const std::optional<std::string>& dir, std::shared_ptr<const ManinSymbolSpace> space,
                                     const CurveData& curve, CacheStatus* status = nullptr);

/// Wraps a payload with its checksum / verifies and unwraps (nullopt when corrupt).
nlohmann::ordered_json seal(const nlohmann::ordered_json& payload);
std::optional<nlohmann::ordered_json> unseal(const std::string& text);

}  // namespace mt
