// ckforms: command line front end
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ckforms/cache.hpp"
#include "ckforms/catalog.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "ckforms/report.hpp"

using namespace ckforms;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kMismatch = 3 };

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Internal:
    case ErrorKind::IoError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DegenerateForm:
    case ErrorKind::SignatureViolation:
      return kInternal;
    default:
      return kInput;
  }
}

struct Overrides {
  std::string config_file;
  std::optional<std::size_t> mc_samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> low, high;
  std::optional<std::size_t> max_flips;
  bool exhaustive = false;
  std::optional<unsigned> threads;
  std::optional<std::string> format;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  bool mc = false, no_mc = false;
};

void add_common(CLI::App* app, Overrides& o, bool with_mc_switch) {
  app->add_option("--config", o.config_file, "TOML config file (default: $CKFORMS_CONFIG)");
  app->add_option("--mc-samples", o.mc_samples, "Monte Carlo sample count");
  app->add_option("--seed", o.seed, "Monte Carlo seed");
  app->add_option("--mc-threshold-low", o.low, "|z| at or below which the estimate is consistent with zero");
  app->add_option("--mc-threshold-high", o.high, "|z| at or above which the estimate is nonzero");
  app->add_option("--max-flips", o.max_flips, "sign flips per candidate in the sign search");
  app->add_flag("--exhaustive", o.exhaustive, "search every admissible sign pattern");
  app->add_option("--threads", o.threads, "worker threads (0: all cores)");
  app->add_option("--format", o.format, "json, csv or md");
  if (with_mc_switch) {
    app->add_flag("--mc", o.mc, "run the Monte Carlo test");
    app->add_flag("--no-mc", o.no_mc, "skip the Monte Carlo test (default)");
  }
}

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config_file.empty() ? config_from_environment() : load_config_file(o.config_file);
  if (o.mc_samples) c.mc_samples = *o.mc_samples;
  if (o.seed) c.seed = *o.seed;
  if (o.low) c.mc_threshold_low = *o.low;
  if (o.high) c.mc_threshold_high = *o.high;
  if (o.max_flips) c.max_flips = *o.max_flips;
  if (o.exhaustive) c.exhaustive_sign_search = true;
  if (o.threads) c.threads = *o.threads;
  if (o.format) c.format = parse_format(*o.format);
  if (o.cache_dir) c.cache_dir = *o.cache_dir;
  if (o.no_cache) c.cache_dir.clear();
  if (o.mc) c.run_mc = true;
  if (o.no_mc) c.run_mc = false;
  c.validate();
  return c;
}

// computes through the cache when one is configured
Json cached(const RunConfig& cfg, const std::string& command, const std::string& pair,
            const std::function<Json()>& compute) {
  if (cfg.cache_dir.empty()) return compute();
  const ResultCache cache(cfg.cache_dir);
  const std::string key = cache_key(command, pair, cfg);
  if (auto hit = cache.lookup(key)) return *hit;
  Json j = compute();
  cache.store(key, j);
  return j;
}

std::string integration_csv(const Json& r) {
  std::string out = "index,estimate,std_error\n";
  for (const auto& c : r["coefficients"]) {
    std::string idx;
    for (const auto& i : c["index"]) idx += (idx.empty() ? "" : " ") + std::to_string(i.get<int>());
    out += idx + "," + c["estimate"].dump() + "," + c["std_error"].dump() + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact Clifford-Klein form obstructions for reductive homogeneous spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_tag());

  Overrides ao, co, io;
  std::string pair;
  auto* analyze_cmd = app.add_subcommand("analyze", "classify one pair G/H or GROUP(H)");
  analyze_cmd->add_option("pair", pair, "pair, e.g. SO(3,2)/SO(3,1)")->required();
  add_common(analyze_cmd, ao, true);
  analyze_cmd->add_option("--cache-dir", ao.cache_dir, "results cache directory");
  analyze_cmd->add_flag("--no-cache", ao.no_cache, "ignore the configured cache");

  std::string catalog_file;
  auto* catalog_cmd = app.add_subcommand("catalog", "classify the catalog and compare with the expected column");
  catalog_cmd->add_option("--file", catalog_file, "TOML catalog replacing the built-in one");
  add_common(catalog_cmd, co, true);

  std::string space, space_fmt = "json";
  auto* coh_cmd = app.add_subcommand("cohomology", "Cartan bigrading of a compact symmetric space");
  coh_cmd->add_option("--space", space, "e.g. SU(3)/SO(3), GR_C(2,1), CP(2)xS(3)")->required();
  coh_cmd->add_option("--format", space_fmt, "json or md");

  std::string lspace, endo, lef_fmt = "json";
  auto* lef_cmd = app.add_subcommand("lefschetz", "Lefschetz class and number for an endomorphism");
  lef_cmd->add_option("--space", lspace, "S(d) or CP(d)")->required();
  lef_cmd->add_option("--endo", endo, "id or k=<rational> (scales the generator)")->required();
  lef_cmd->add_option("--format", lef_fmt, "json or md");

  std::string ipair;
  std::size_t list = 1000;
  auto* int_cmd = app.add_subcommand("integrate", "Haar Monte Carlo estimate of the invariant form");
  int_cmd->add_option("pair", ipair, "pair")->required();
  add_common(int_cmd, io, false);
  int_cmd->add_option("--list", list, "coefficients to list");
  int_cmd->add_option("--cache-dir", io.cache_dir, "results cache directory");
  int_cmd->add_flag("--no-cache", io.no_cache, "ignore the configured cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze_cmd) {
      const RunConfig cfg = resolve(ao);
      const PairSpec ps = parse_pair(pair);
      const Json v = cached(cfg, "analyze", ps.to_string(), [&] { return analysis_json(analyze(ps, cfg.classify_options())); });
      switch (cfg.format) {
        case OutputFormat::Json: std::cout << dump_json(v); break;
        case OutputFormat::Csv: std::cout << analyses_csv({v}); break;
        case OutputFormat::Markdown: std::cout << analysis_markdown(v); break;
      }
      return kOk;
    }
    if (*catalog_cmd) {
      const RunConfig cfg = resolve(co);
      const auto entries = catalog_file.empty() ? builtin_catalog() : load_catalog_file(catalog_file);
      const auto results = run_catalog(entries, cfg);
      const Json j = catalog_json(results, cfg);
      switch (cfg.format) {
        case OutputFormat::Json: std::cout << dump_json(j); break;
        case OutputFormat::Csv: std::cout << catalog_csv(j); break;
        case OutputFormat::Markdown: std::cout << catalog_markdown(j); break;
      }
      for (const auto& r : results)
        if (!r.error.empty()) std::cerr << r.entry.id << ": " << r.error << "\n";
      return mismatch_count(results) == 0 ? kOk : kMismatch;
    }
    if (*coh_cmd) {
      const Json j = cohomology_json(parse_space(space));
      const OutputFormat f = parse_format(space_fmt);
      std::cout << (f == OutputFormat::Markdown ? cohomology_markdown(j) : dump_json(j));
      return kOk;
    }
    if (*lef_cmd) {
      const SymSpaceProduct s = parse_space(lspace);
      if (s.factors.size() != 1)
        throw Error(ErrorKind::UnsupportedSpace, "lefschetz needs a single sphere or projective space");
      const Json j = lefschetz_json(s.factors[0], endo);
      const OutputFormat f = parse_format(lef_fmt);
      std::cout << (f == OutputFormat::Markdown ? lefschetz_markdown(j) : dump_json(j));
      return kOk;
    }
    if (*int_cmd) {
      RunConfig cfg = resolve(io);
      cfg.run_mc = true;
      const PairSpec ps = parse_pair(ipair);
      const Json r = cached(cfg, "integrate:" + std::to_string(list), ps.to_string(), [&] {
        EmbedOptions eo;
        eo.dimension_cap = cfg.dimension_cap;
        const ReductivePair rp = embed_pair(ps, eo);
        Json j;
        j["pair"] = ps.to_string();
        j.update(integration_json(average_form(rp, cfg.classify_options().mc), list));
        return j;
      });
      switch (cfg.format) {
        case OutputFormat::Json: std::cout << dump_json(r); break;
        case OutputFormat::Csv: std::cout << integration_csv(r); break;
        case OutputFormat::Markdown:
          std::cout << "## " << r["pair"].get<std::string>() << "\n\nn = " << r["n_samples"] << ", seed = " << r["seed"]
                    << ", max |z| = " << r["max_abs_z"].dump() << ", verdict **" << r["verdict"].get<std::string>()
                    << "**\n";
          break;
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
