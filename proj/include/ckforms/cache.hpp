#pragma once

#include <optional>
#include <string>

#include "ckforms/config.hpp"
#include "ckforms/report.hpp"

namespace ckforms {

std::string sha256_hex(const std::string& data);

// hash of (command, pair grammar string, result-relevant config, version tag)
std::string cache_key(const std::string& command, const std::string& pair, const RunConfig& cfg);

class ResultCache {
 public:
  explicit ResultCache(std::string dir);  // creates the directory; throws IoError
  const std::string& dir() const noexcept { return dir_; }
  std::string path_for(const std::string& key) const;
  std::optional<Json> lookup(const std::string& key) const;  // unreadable entries count as misses
  void store(const std::string& key, const Json& value) const;  // atomic rename; throws IoError

 private:
  std::string dir_;
};

}  // namespace ckforms
