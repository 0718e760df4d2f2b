#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckforms/config.hpp"
#include "ckforms/obstructions.hpp"

namespace ckforms {

struct CatalogEntry {
  std::string id;
  std::string pair_text;
  PairSpec pair;
  std::string label;  // which family the instance comes from
  Classification expected = Classification::Unknown;
};

const std::vector<CatalogEntry>& builtin_catalog();
// TOML: [[entry]] tables with id, pair, label, expected
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
std::vector<CatalogEntry> load_catalog_string(const std::string& toml_text);

struct CatalogResult {
  CatalogEntry entry;
  std::optional<Analysis> analysis;
  std::string error;
  bool match() const {
    return analysis && analysis->verdict.classification() == entry.expected;
  }
};

// entries run in parallel, results in catalog order
std::vector<CatalogResult> run_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg);
std::size_t mismatch_count(const std::vector<CatalogResult>& results);

}  // namespace ckforms
