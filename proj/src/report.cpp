#include "ckforms/report.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "ckforms/errors.hpp"

namespace ckforms {

namespace {

Json z_value(double z) {
  if (std::isinf(z)) return "Infinity";
  return z;
}

Json rational_json(const Rational& q) { return rational_to_string(q); }

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

Json integration_json(const IntegrationReport& r, std::size_t max_listed) {
  Json j;
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  j["degree"] = r.degree;
  j["basis_dim"] = r.basis_dim;
  j["coefficient_count"] = r.estimate.size();
  j["max_abs_z"] = z_value(r.max_abs_z);
  const auto tuples = increasing_tuples(r.basis_dim, r.degree);
  j["argmax_index"] = r.estimate.size() ? Json(tuples.at(r.argmax)) : Json::array();
  j["verdict"] = mc_verdict_name(r.verdict);
  j["thresholds"] = {{"low", r.thresholds.vanish}, {"high", r.thresholds.nonzero}};
  Json list = Json::array();
  for (std::size_t i = 0; i < r.estimate.size() && i < max_listed; ++i)
    list.push_back({{"index", tuples[i]}, {"estimate", r.estimate.coeffs[i]}, {"std_error", r.std_errors[i]}});
  j["coefficients"] = std::move(list);
  j["coefficients_truncated"] = r.estimate.size() > max_listed;
  return j;
}

Json analysis_json(const Analysis& a, std::size_t max_listed) {
  Json j;
  j["pair"] = a.pair.to_string();
  j["embedding"] = embedding_name(a.pair.embedding);
  j["embedding_class"] = "standard";
  j["dims"] = {{"g", a.dims.g}, {"h", a.dims.h}, {"k", a.dims.k}, {"l", a.dims.l},
               {"V", a.dims.V}, {"p", a.dims.p}, {"q", a.dims.q}};
  j["rank"] = {{"rkG", a.rank.rk_G}, {"rkK", a.rank.rk_K}, {"rkH", a.rank.rk_H},
               {"rkL", a.rank.rk_L}, {"verdict", rank_verdict_name(a.rank_verdict)}};
  Json sign;
  sign["found"] = a.sign.element.has_value();
  sign["omega_diagonal"] = a.sign.element ? Json(a.sign.element->diagonal) : Json(nullptr);
  sign["det"] = a.sign.element ? rational_json(a.sign.element->det_on_V) : Json(nullptr);
  sign["from_seed_pattern"] = a.sign.element ? a.sign.element->from_seed : false;
  sign["verified"] = a.sign_check ? a.sign_check->ok() : false;
  sign["candidates_examined"] = a.sign.candidates_examined;
  sign["candidates_in_K"] = a.sign.candidates_in_K;
  sign["exhaustive"] = a.sign.exhaustive;
  j["sign"] = std::move(sign);
  j["complexification"] = {{"applicable", a.complexification.applicable},
                           {"even_nontrivial", a.complexification.even_nontrivial},
                           {"space", a.complexification.applicable ? Json(a.complexification.space) : Json(nullptr)}};
  j["homotopy"] = {{"applicable", a.homotopy}};
  Json mc;
  mc["run"] = a.mc.has_value();
  if (a.mc) mc.update(integration_json(*a.mc, max_listed));
  if (!a.mc_skipped.empty()) mc["skipped_reason"] = a.mc_skipped;
  j["montecarlo"] = std::move(mc);
  j["bidegree"] = {{"a", a.bidegree.a}, {"b", a.bidegree.b}, {"vanish_signal", a.bidegree.vanish_signal},
                   {"chern_weil", a.bidegree.chern_weil}, {"g_dual", a.bidegree.g_dual},
                   {"h_dual", a.bidegree.h_dual}};
  j["classification"] = classification_name(a.verdict.classification());
  Json reasons = Json::array();
  for (const auto& e : a.verdict.reasons())
    reasons.push_back({{"kind", evidence_kind_name(e.kind)}, {"effect", evidence_effect_name(e.effect)},
                       {"detail", e.detail}});
  j["reasons"] = std::move(reasons);
  return j;
}

Json catalog_json(const std::vector<CatalogResult>& results, const RunConfig& cfg) {
  Json j;
  j["version"] = version_tag();
  j["config"] = {{"mc", cfg.run_mc},
                 {"mc_samples", cfg.mc_samples},
                 {"seed", cfg.seed},
                 {"mc_threshold_low", cfg.mc_threshold_low},
                 {"mc_threshold_high", cfg.mc_threshold_high},
                 {"max_flips", cfg.max_flips},
                 {"exhaustive_sign_search", cfg.exhaustive_sign_search},
                 {"candidate_cap", cfg.candidate_cap},
                 {"coefficient_cap", cfg.coefficient_cap}};
  Json entries = Json::array();
  for (const auto& r : results) {
    Json e;
    e["id"] = r.entry.id;
    e["pair"] = r.entry.pair.to_string();
    e["label"] = r.entry.label;
    e["expected"] = classification_name(r.entry.expected);
    e["computed"] = r.analysis ? Json(classification_name(r.analysis->verdict.classification())) : Json(nullptr);
    e["match"] = r.match();
    if (!r.error.empty()) e["error"] = r.error;
    e["verdict"] = r.analysis ? analysis_json(*r.analysis) : Json(nullptr);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["entry_count"] = results.size();
  j["mismatches"] = mismatch_count(results);
  return j;
}

Json cohomology_json(const SymSpaceProduct& s) {
  const PoincareBigrade b = poincare_bigrade(s);
  Json j;
  j["space"] = s.to_string();
  j["dimension"] = s.dimension();
  j["even_series"] = b.even_series;
  j["primitive_degrees"] = b.primitive_degrees;
  j["dim_even_top"] = b.dim_even_top;
  j["dim_odd_top"] = b.dim_odd_top;
  j["poincare_series"] = b.poincare_series;
  j["poincare_polynomial"] = poly_to_string(b.poincare_series);
  j["euler_characteristic"] = b.euler_characteristic;
  j["rank_G"] = b.rank_G;
  j["rank_K"] = b.rank_K;
  j["even_nontrivial"] = even_nontrivial(s);
  return j;
}

RingEndomorphism parse_endomorphism(const GradedRing& r, const std::string& text) {
  if (text == "id" || text == "identity") return identity_endomorphism(r);
  if (text.rfind("k=", 0) == 0) {
    const std::string v = text.substr(2);
    static const std::regex rational_re(R"(-?[0-9]+(/[0-9]*[1-9][0-9]*)?)");
    if (!std::regex_match(v, rational_re)) throw ParseError("bad scaling factor '" + v + "'", 2, "integer or p/q, q > 0");
    Rational k(v);
    k.canonicalize();
    return generator_scaling(r, k);
  }
  throw ParseError("unknown endomorphism '" + text + "'", 0, "id or k=<rational>");
}

Json lefschetz_json(const SymSpaceId& s, const std::string& endo_text) {
  const GradedRing r = build_ring(s);
  const RingEndomorphism f = parse_endomorphism(r, endo_text);
  Json j;
  j["space"] = s.to_string();
  j["dimension"] = r.dimension();
  Json basis = Json::array();
  for (const auto& b : r.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
  j["basis"] = std::move(basis);
  Json terms = Json::array();
  for (const auto& t : lefschetz_class(r).terms)
    terms.push_back({{"left", r.basis()[t.left].label}, {"right", r.basis()[t.right].label},
                     {"coefficient", rational_json(t.coeff)}});
  j["lefschetz_class"] = std::move(terms);
  j["endomorphism"] = endo_text;
  Json degrees = Json::array();
  for (std::size_t k = 0; k < f.per_degree.size(); ++k) {
    const QMatrix& m = f.per_degree[k];
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(i, c)));
      rows.push_back(std::move(row));
    }
    degrees.push_back(std::move(rows));
  }
  j["pullback_per_degree"] = std::move(degrees);
  j["is_ring_map"] = is_ring_map(r, f);
  const LefschetzNumber n = lefschetz_number(r, f);
  j["lefschetz_number"] = {{"graph_pairing", rational_json(n.graph_pairing)},
                           {"trace_formula", rational_json(n.trace_formula)},
                           {"agree", n.graph_pairing == n.trace_formula}};
  std::optional<VolumeFormula> vol;
  if (s.family == SpaceFamily::CPn) vol = su_volume_coefficients(s.params.at(0));
  if (s.family == SpaceFamily::Sphere) vol = so_volume_coefficients(s.params.at(0));
  if (vol) {
    Json t = Json::array();
    for (const auto& v : vol->terms)
      t.push_back({{"invariant", v.invariant}, {"definition", v.definition},
                   {"coefficient", rational_json(v.coefficient)}});
    j["volume_formula"] = {{"group", vol->group}, {"statement", vol->statement}, {"terms", std::move(t)}};
  }
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

const char* const kCsvHeader =
    "id,pair,label,expected,computed,match,rank_verdict,sign_found,omega_diagonal,complexification,"
    "homotopy,mc_verdict,mc_max_abs_z,error";

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string str_of(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

std::string verdict_cells(const Json& v) {
  if (v.is_null()) return ",,,,,,";
  std::vector<std::string> cells;
  cells.push_back(str_of(v["rank"]["verdict"]));
  cells.push_back(str_of(v["sign"]["found"]));
  cells.push_back(v["sign"]["found"].get<bool>() ? join_ints(v["sign"]["omega_diagonal"].get<std::vector<int>>(), " ")
                                                 : "");
  const Json& c = v["complexification"];
  cells.push_back(c["applicable"].get<bool>() ? (c["even_nontrivial"].get<bool>() ? "obstruction" : "no obstruction")
                                              : "n/a");
  cells.push_back(str_of(v["homotopy"]["applicable"]));
  const Json& mc = v["montecarlo"];
  cells.push_back(mc["run"].get<bool>() ? str_of(mc["verdict"]) : "");
  cells.push_back(mc["run"].get<bool>() ? str_of(mc["max_abs_z"]) : "");
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
  return out;
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string evidence_summary(const Json& v) {
  if (v.is_null()) return "";
  std::string out;
  for (const auto& r : v["reasons"]) {
    const std::string eff = r["effect"].get<std::string>();
    if (eff == "neutral") continue;
    if (!out.empty()) out += "; ";
    out += r["kind"].get<std::string>() + ": " + eff;
  }
  return out;
}

}  // namespace

std::string analyses_csv(const std::vector<Json>& rows, const std::vector<std::string>& ids) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& v = rows[i];
    out += csv_field(i < ids.size() ? ids[i] : "") + "," + csv_field(str_of(v["pair"])) + ",,," +
           csv_field(str_of(v["classification"])) + ",," + verdict_cells(v) + ",\n";
  }
  return out;
}

std::string catalog_csv(const Json& catalog) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& e : catalog["entries"]) {
    out += csv_field(str_of(e["id"])) + "," + csv_field(str_of(e["pair"])) + "," + csv_field(str_of(e["label"])) +
           "," + csv_field(str_of(e["expected"])) + "," + csv_field(str_of(e["computed"])) + "," +
           str_of(e["match"]) + "," + verdict_cells(e["verdict"]) + "," +
           csv_field(e.contains("error") ? str_of(e["error"]) : "") + "\n";
  }
  return out;
}

std::string catalog_markdown(const Json& catalog) {
  std::ostringstream os;
  os << "| id | pair | family | expected | computed | match | evidence |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& e : catalog["entries"]) {
    os << "| " << md_cell(str_of(e["id"])) << " | `" << md_cell(str_of(e["pair"])) << "` | "
       << md_cell(str_of(e["label"])) << " | " << str_of(e["expected"]) << " | "
       << (e["computed"].is_null() ? "error" : str_of(e["computed"])) << " | "
       << (e["match"].get<bool>() ? "yes" : "**no**") << " | " << md_cell(evidence_summary(e["verdict"])) << " |\n";
  }
  os << "\n" << catalog["mismatches"].get<std::size_t>() << " mismatches out of "
     << catalog["entry_count"].get<std::size_t>() << " entries\n";
  return os.str();
}

std::string analysis_markdown(const Json& v) {
  std::ostringstream os;
  os << "## " << str_of(v["pair"]) << "\n\n";
  os << "classification: **" << str_of(v["classification"]) << "**\n\n";
  const Json& d = v["dims"];
  os << "dim g = " << d["g"] << ", dim h = " << d["h"] << ", dim k = " << d["k"] << ", dim l = " << d["l"]
     << ", dim V = " << d["V"] << "\n\n";
  os << "| channel | effect | detail |\n|---|---|---|\n";
  for (const auto& r : v["reasons"])
    os << "| " << str_of(r["kind"]) << " | " << str_of(r["effect"]) << " | " << md_cell(str_of(r["detail"]))
       << " |\n";
  return os.str();
}

std::string cohomology_markdown(const Json& c) {
  std::ostringstream os;
  os << "## " << str_of(c["space"]) << "\n\n";
  os << "| field | value |\n|---|---|\n";
  for (const char* k : {"dimension", "poincare_polynomial", "euler_characteristic", "primitive_degrees",
                        "dim_even_top", "dim_odd_top", "rank_G", "rank_K", "even_nontrivial"})
    os << "| " << k << " | " << md_cell(str_of(c[k])) << " |\n";
  return os.str();
}

std::string lefschetz_markdown(const Json& l) {
  std::ostringstream os;
  os << "## " << str_of(l["space"]) << ", f = " << str_of(l["endomorphism"]) << "\n\n";
  os << "| left | right | coefficient |\n|---|---|---|\n";
  for (const auto& t : l["lefschetz_class"])
    os << "| " << str_of(t["left"]) << " | " << str_of(t["right"]) << " | " << str_of(t["coefficient"]) << " |\n";
  const Json& n = l["lefschetz_number"];
  os << "\nLefschetz number: " << str_of(n["graph_pairing"]) << " (graph pairing), " << str_of(n["trace_formula"])
     << " (trace formula)\n";
  return os.str();
}

}  // namespace ckforms
