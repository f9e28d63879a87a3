#include "commdom/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

namespace commdom {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

json key_json(const CacheKey& k) {
  json j;
  j["descriptor"] = k.descriptor;
  j["kind"] = k.kind;
  j["budget"] = k.budget;
  return j;
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
  if (dir_.empty()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) disable("cannot create " + dir_ + ": " + ec.message());
}

void ResultCache::disable(const std::string& why) const {
  std::cerr << "warning: cache disabled (" << why << ")\n";
  dir_.clear();
}

std::string ResultCache::path_for(const CacheKey& key) const {
  return (fs::path(dir_) / (fnv1a_hex(std::string(kToolVersion) + "\n" + key_json(key).dump()) + ".json")).string();
}

std::optional<json> ResultCache::get(const CacheKey& key) const {
  if (!enabled()) return std::nullopt;
  std::lock_guard lock(cache_mutex());
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json entry = json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("tool_version", "") != kToolVersion) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key_json(key) || !entry.contains("value")) return std::nullopt;
  return entry["value"];
}

void ResultCache::put(const CacheKey& key, const json& value) {
  if (!enabled()) return;
  std::lock_guard lock(cache_mutex());
  json entry;
  entry["tool_version"] = kToolVersion;
  entry["key"] = key_json(key);
  entry["value"] = value;
  const std::string path = path_for(key), tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out || !(out << entry.dump() << '\n')) {
      disable("cannot write " + tmp);
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) disable("cannot write " + path + ": " + ec.message());
}

}  // namespace commdom
