#pragma once

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace finmat {

// Content-addressed JSON store. Keys are FNV-1a digests of the input parts; writes go to a
// temporary file and are renamed into place. A default-constructed cache is disabled.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  static std::string key(const std::vector<std::string>& parts);
  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value) const;

 private:
  std::filesystem::path dir_;
};

// Bumped whenever cached payloads change meaning.
inline constexpr const char* kCacheVersion = "finmat-cache-3";

}  // namespace finmat
