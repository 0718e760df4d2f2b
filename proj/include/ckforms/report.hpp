#pragma once

#include <string>
#include <vector>

#include "ckforms/catalog.hpp"
#include "ckforms/cohomology.hpp"
#include "ckforms/config.hpp"
#include "ckforms/integrator.hpp"
#include "ckforms/obstructions.hpp"
#include "json.hpp"

namespace ckforms {

using Json = nlohmann::ordered_json;

// max_listed bounds the per-coefficient list; the summary fields are always present
Json integration_json(const IntegrationReport& r, std::size_t max_listed = 64);
Json analysis_json(const Analysis& a, std::size_t max_listed = 64);
Json catalog_json(const std::vector<CatalogResult>& results, const RunConfig& cfg);
Json cohomology_json(const SymSpaceProduct& s);
Json lefschetz_json(const SymSpaceId& s, const std::string& endo_text);

// "id" or "k=<rational>"; throws ParseError
RingEndomorphism parse_endomorphism(const GradedRing& r, const std::string& text);

std::string dump_json(const Json& j);

extern const char* const kCsvHeader;
// verdict objects (analysis_json) flattened to one row each
std::string analyses_csv(const std::vector<Json>& rows, const std::vector<std::string>& ids = {});
std::string catalog_csv(const Json& catalog);
std::string catalog_markdown(const Json& catalog);
std::string analysis_markdown(const Json& verdict);
std::string cohomology_markdown(const Json& c);
std::string lefschetz_markdown(const Json& l);

}  // namespace ckforms
