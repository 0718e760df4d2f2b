#include "ckforms/cache.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ckforms/errors.hpp"

namespace ckforms {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Internal, "sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string cache_key(const std::string& command, const std::string& pair, const RunConfig& cfg) {
  return sha256_hex(command + "\n" + pair + "\n" + cfg.canonical() + "\n" + version_tag());
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string ResultCache::path_for(const std::string& key) const { return (fs::path(dir_) / (key + ".json")).string(); }

std::optional<Json> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const Json& value) const {
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const std::string tmp = path_for(key) + ".tmp" + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp);
    out << dump_json(value);
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path_for(key), ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot move cache entry into place: " + ec.message());
}

}  // namespace ckforms
