#include "cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

namespace confalg::cli {

std::optional<ResultCache> ResultCache::open(const std::optional<std::filesystem::path>& configured) {
  std::optional<std::filesystem::path> dir = configured;
  if (const char* env = std::getenv("CONFALG_CACHE_DIR"); env && *env) dir = env;
  if (!dir) return std::nullopt;
  std::filesystem::create_directories(*dir);
  return ResultCache(*dir);
}

std::string ResultCache::key_for(const std::string& material) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(material.data(), material.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xf];
  }
  return hex;
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ResultCache::put(const std::string& key, const std::string& document) const {
  // Write-then-rename so concurrent readers never see a partial file.
  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << document;
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

}  // namespace confalg::cli
