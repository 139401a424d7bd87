#include "finmat/pipeline/cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>
#include <thread>

namespace finmat {

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string Cache::key(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : parts) {
    for (unsigned char c : p) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;  // part separator
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // a torn or foreign file counts as a miss
  }
}

void Cache::put(const std::string& key, const nlohmann::json& value) const {
  if (!enabled()) return;
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmpname;
  tmpname << key << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  auto tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp);
    out << value.dump();
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace finmat
