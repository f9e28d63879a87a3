#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace commdom {

inline constexpr const char* kToolVersion = "0.1.0";

/// What a cache entry is keyed on.
struct CacheKey {
  std::string descriptor;
  std::string kind;   ///< "gamma", "gamma_t", "invariants", ...
  double budget = 0;  ///< seconds; 0 for budget-free computations
};

/// Content-addressed JSON store, one file per key under a directory. A
/// default-constructed cache is off and every call is a no-op. Entries from
/// another tool version, with a mismatching key or that fail to parse are
/// treated as misses. I/O failures switch the cache off with one warning on
/// stderr.
class ResultCache {
public:
  ResultCache() = default;
  explicit ResultCache(std::string directory);

  bool enabled() const { return !dir_.empty(); }
  std::optional<nlohmann::ordered_json> get(const CacheKey& key) const;
  void put(const CacheKey& key, const nlohmann::ordered_json& value);
  /// File that holds the entry for key.
  std::string path_for(const CacheKey& key) const;

private:
  void disable(const std::string& why) const;
  mutable std::string dir_;
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace commdom
