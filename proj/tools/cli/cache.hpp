#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace confalg::cli {

/// Directory-backed store of result documents keyed by content hash.
/// CONFALG_CACHE_DIR, when set, overrides the configured directory.
class ResultCache {
 public:
  static std::optional<ResultCache> open(const std::optional<std::filesystem::path>& configured);

  /// Hex SHA-256 of the canonical key material.
  static std::string key_for(const std::string& material);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& document) const;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path dir_;
};

}  // namespace confalg::cli
