#include "lshape/experiment/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lshape/experiment/config.hpp"

namespace lshape::experiment {

namespace fs = std::filesystem;

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
  if (enabled()) fs::create_directories(dir_);
}

std::string ResultCache::resolve_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LSHAPE_CACHE_DIR"); env != nullptr) return env;
  return {};
}

std::string ResultCache::path_for(const nlohmann::json& key) const {
  return (fs::path(dir_) / (hex64(fnv1a(key.dump())) + ".json")).string();
}

std::optional<nlohmann::json> ResultCache::load(const nlohmann::json& key) const {
  if (!enabled()) return std::nullopt;
  const std::string path = path_for(key);
  std::lock_guard<std::mutex> lock(mu_);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json entry = nlohmann::json::parse(in);
    if (entry.at("key") != key) {
      std::cerr << "warning: cache entry " << path << " belongs to another key; recomputing\n";
      return std::nullopt;
    }
    return entry.at("value");
  } catch (const std::exception& e) {
    std::cerr << "warning: unreadable cache entry " << path << " (" << e.what()
              << "); recomputing\n";
    return std::nullopt;
  }
}

void ResultCache::store(const nlohmann::json& key, const nlohmann::json& value) const {
  if (!enabled()) return;
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  std::lock_guard<std::mutex> lock(mu_);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      std::cerr << "warning: cannot write cache entry " << tmp << "\n";
      return;
    }
    out << nlohmann::json{{"key", key}, {"value", value}}.dump() << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) std::cerr << "warning: cannot commit cache entry " << path << ": " << ec.message() << "\n";
}

}  // namespace lshape::experiment
