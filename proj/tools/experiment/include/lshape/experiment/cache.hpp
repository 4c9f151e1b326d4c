#pragma once

#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

namespace lshape::experiment {

/// File-per-entry result cache keyed by a hash of the key material. A hit
/// requires the stored key material to match exactly; unreadable or
/// mismatching entries are reported on stderr and treated as misses.
class ResultCache {
 public:
  /// Empty directory disables the cache.
  explicit ResultCache(std::string directory);

  [[nodiscard]] bool enabled() const { return !dir_.empty(); }
  [[nodiscard]] std::optional<nlohmann::json> load(const nlohmann::json& key) const;
  void store(const nlohmann::json& key, const nlohmann::json& value) const;

  /// --cache-dir if given, else $LSHAPE_CACHE_DIR, else disabled.
  [[nodiscard]] static std::string resolve_directory(const std::string& flag);

 private:
  [[nodiscard]] std::string path_for(const nlohmann::json& key) const;

  std::string dir_;
  mutable std::mutex mu_;
};

}  // namespace lshape::experiment
