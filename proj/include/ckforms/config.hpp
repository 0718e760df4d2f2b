#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ckforms/obstructions.hpp"

namespace ckforms {

const char* version_tag();

enum class OutputFormat { Json, Csv, Markdown };
const char* format_name(OutputFormat f);
OutputFormat parse_format(const std::string& s);  // throws ConfigError

struct RunConfig {
  std::size_t mc_samples = 20000;
  std::uint64_t seed = 0;
  double mc_threshold_low = 3.0;
  double mc_threshold_high = 5.0;
  bool run_mc = false;
  std::size_t max_flips = 4;
  bool exhaustive_sign_search = false;
  std::uint64_t candidate_cap = 1ULL << 20;
  std::uint64_t coefficient_cap = 1000000;
  std::size_t dimension_cap = 256;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::Json;
  std::string cache_dir;  // empty: no cache

  void validate() const;  // throws ConfigError
  ClassifyOptions classify_options() const;
  // the fields that influence results, in a fixed order
  std::string canonical() const;
};

// keys mirror the RunConfig fields; unknown keys are rejected
RunConfig load_config_file(const std::string& path, RunConfig base = {});
RunConfig load_config_string(const std::string& toml_text, RunConfig base = {});
// CKFORMS_CONFIG if set, else defaults
RunConfig config_from_environment();

}  // namespace ckforms
