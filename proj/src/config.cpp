#include "ckforms/config.hpp"

#include <cstdlib>
#include <sstream>

#include "ckforms/errors.hpp"
#include "toml.hpp"

#ifndef CKFORMS_VERSION_TAG
#define CKFORMS_VERSION_TAG "ckforms-dev"
#endif

namespace ckforms {

const char* version_tag() { return CKFORMS_VERSION_TAG; }

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Markdown: return "md";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md" || s == "markdown") return OutputFormat::Markdown;
  throw Error(ErrorKind::ConfigError, "unknown format '" + s + "' (json, csv, md)");
}

void RunConfig::validate() const {
  if (mc_samples < 100) throw Error(ErrorKind::ConfigError, "mc_samples must be at least 100");
  if (!(mc_threshold_low > 0) || !(mc_threshold_low < mc_threshold_high))
    throw Error(ErrorKind::ConfigError, "need 0 < mc_threshold_low < mc_threshold_high");
  if (candidate_cap == 0) throw Error(ErrorKind::ConfigError, "candidate_cap must be positive");
  if (coefficient_cap == 0) throw Error(ErrorKind::ConfigError, "coefficient_cap must be positive");
  if (dimension_cap == 0) throw Error(ErrorKind::ConfigError, "dimension_cap must be positive");
}

ClassifyOptions RunConfig::classify_options() const {
  ClassifyOptions o;
  o.sign.max_flips = max_flips;
  o.sign.exhaustive = exhaustive_sign_search;
  o.sign.candidate_cap = candidate_cap;
  o.run_mc = run_mc;
  o.mc.n_samples = mc_samples;
  o.mc.seed = seed;
  o.mc.threads = threads;
  o.mc.coefficient_cap = coefficient_cap;
  o.mc.thresholds = {mc_threshold_low, mc_threshold_high};
  o.dimension_cap = dimension_cap;
  return o;
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os.precision(17);
  os << "mc_samples=" << mc_samples << ";seed=" << seed << ";low=" << mc_threshold_low
     << ";high=" << mc_threshold_high << ";mc=" << run_mc << ";max_flips=" << max_flips
     << ";exhaustive=" << exhaustive_sign_search << ";candidate_cap=" << candidate_cap
     << ";coefficient_cap=" << coefficient_cap << ";dimension_cap=" << dimension_cap;
  return os.str();
}

namespace {

template <class T>
T get_unsigned(const toml::node& n, const std::string& key) {
  const auto* v = n.as_integer();
  if (!v || v->get() < 0) throw Error(ErrorKind::ConfigError, key + " must be a nonnegative integer");
  return static_cast<T>(v->get());
}

double get_number(const toml::node& n, const std::string& key) {
  const auto v = n.value<double>();
  if (!v) throw Error(ErrorKind::ConfigError, key + " must be a number");
  return *v;
}

bool get_bool(const toml::node& n, const std::string& key) {
  const auto* v = n.as_boolean();
  if (!v) throw Error(ErrorKind::ConfigError, key + " must be a boolean");
  return v->get();
}

std::string get_string(const toml::node& n, const std::string& key) {
  const auto* v = n.as_string();
  if (!v) throw Error(ErrorKind::ConfigError, key + " must be a string");
  return v->get();
}

RunConfig apply(const toml::table& t, RunConfig c) {
  for (const auto& [k, node] : t) {
    const std::string key(k.str());
    if (key == "mc_samples") c.mc_samples = get_unsigned<std::size_t>(node, key);
    else if (key == "seed") c.seed = get_unsigned<std::uint64_t>(node, key);
    else if (key == "mc_threshold_low") c.mc_threshold_low = get_number(node, key);
    else if (key == "mc_threshold_high") c.mc_threshold_high = get_number(node, key);
    else if (key == "run_mc") c.run_mc = get_bool(node, key);
    else if (key == "max_flips") c.max_flips = get_unsigned<std::size_t>(node, key);
    else if (key == "exhaustive_sign_search") c.exhaustive_sign_search = get_bool(node, key);
    else if (key == "candidate_cap") c.candidate_cap = get_unsigned<std::uint64_t>(node, key);
    else if (key == "coefficient_cap") c.coefficient_cap = get_unsigned<std::uint64_t>(node, key);
    else if (key == "dimension_cap") c.dimension_cap = get_unsigned<std::size_t>(node, key);
    else if (key == "threads") c.threads = get_unsigned<unsigned>(node, key);
    else if (key == "format") c.format = parse_format(get_string(node, key));
    else if (key == "cache_dir") c.cache_dir = get_string(node, key);
    else throw Error(ErrorKind::ConfigError, "unknown config key '" + key + "'");
  }
  c.validate();
  return c;
}

}  // namespace

RunConfig load_config_string(const std::string& text, RunConfig base) {
  try {
    return apply(toml::parse(text), std::move(base));
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("invalid TOML: ") + std::string(e.description()));
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  try {
    return apply(toml::parse_file(path), std::move(base));
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::ConfigError, path + ": " + std::string(e.description()));
  }
}

RunConfig config_from_environment() {
  const char* p = std::getenv("CKFORMS_CONFIG");
  if (p && *p) return load_config_file(p);
  return {};
}

}  // namespace ckforms
