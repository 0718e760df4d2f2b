#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ckforms/cache.hpp"
#include "ckforms/catalog.hpp"
#include "ckforms/config.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "ckforms/report.hpp"

using namespace ckforms;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

// quote-aware field split
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> f(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        f.back() += '"';
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (c == ',' && !quoted) {
      f.emplace_back();
    } else {
      f.back() += c;
    }
  }
  return f;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ckforms_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

const std::vector<CatalogResult>& catalog_results() {
  static const std::vector<CatalogResult> r = run_catalog(builtin_catalog(), RunConfig{});
  return r;
}

}  // namespace

TEST(Catalog, GoldenExpectedColumn) {
  std::ifstream in(std::string(CKFORMS_TEST_DATA) + "/catalog_expected.csv");
  ASSERT_TRUE(in.good());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "id,pair,expected");
  const auto& results = catalog_results();
  std::size_t row = 0;
  while (std::getline(in, line)) {
    const auto f = csv_fields(line);
    ASSERT_EQ(f.size(), 3u) << line;
    ASSERT_LT(row, results.size());
    const CatalogResult& r = results[row++];
    EXPECT_EQ(r.entry.id, f[0]);
    EXPECT_EQ(r.entry.pair.to_string(), parse_pair(f[1]).to_string());
    ASSERT_TRUE(r.analysis.has_value()) << r.entry.id << ": " << r.error;
    EXPECT_EQ(classification_name(r.analysis->verdict.classification()), f[2]) << r.entry.id;
    EXPECT_EQ(classification_name(r.entry.expected), f[2]) << r.entry.id;
  }
  EXPECT_EQ(row, results.size());
  EXPECT_EQ(mismatch_count(results), 0u);
}

TEST(Catalog, EntriesAreWellFormed) {
  for (const auto& e : builtin_catalog()) {
    EXPECT_FALSE(e.label.empty()) << e.id;
    EXPECT_EQ(parse_pair(e.pair_text), e.pair) << e.id;
  }
}

TEST(Catalog, FileOverride) {
  const std::string text = R"toml(
[[entry]]
id = "a"
pair = "SO(3,2)/SO(3,1)"
label = "odd p"
expected = "NoCompactForms"

[[entry]]
id = "b"
pair = "SO(2,2)/SO(2,1)"
label = "deliberately wrong"
expected = "NoCompactForms"
)toml";
  const auto entries = load_catalog_string(text);
  ASSERT_EQ(entries.size(), 2u);
  const auto results = run_catalog(entries, RunConfig{});
  EXPECT_TRUE(results[0].match());
  EXPECT_FALSE(results[1].match());
  EXPECT_EQ(mismatch_count(results), 1u);
  const Json j = catalog_json(results, RunConfig{});
  EXPECT_EQ(j["mismatches"], 1);
  EXPECT_EQ(j["entries"][1]["computed"], "RationalVolume");
}

TEST(Catalog, PerEntryErrorsAreCollected) {
  CatalogEntry bad = builtin_catalog()[0];
  bad.id = "too-big";
  RunConfig cfg;
  cfg.dimension_cap = 2;
  const auto results = run_catalog({bad}, cfg);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].analysis.has_value());
  EXPECT_NE(results[0].error.find("DimensionCapExceeded"), std::string::npos);
  EXPECT_EQ(mismatch_count(results), 1u);
  const Json j = catalog_json(results, cfg);
  EXPECT_TRUE(j["entries"][0].contains("error"));
}

TEST(Catalog, BadFiles) {
  for (const char* t : {"[[entry]]\nid = \"x\"\n", "entry = 3", "[[entry]]\nid=\"x\"\npair=\"SO(3,2)/SO(3,1)\"\nlabel=\"l\"\nexpected=\"Maybe\"",
                        "not toml ["}) {
    try {
      load_catalog_string(t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ConfigError) << t;
    }
  }
  EXPECT_THROW(load_catalog_string("[[entry]]\nid=\"x\"\npair=\"SO(3,\"\nlabel=\"l\"\nexpected=\"Unknown\""), ParseError);
}

TEST(Report, CsvRowCount) {
  const Json j = catalog_json(catalog_results(), RunConfig{});
  const auto rows = lines(catalog_csv(j));
  ASSERT_EQ(rows.size(), builtin_catalog().size() + 1);
  EXPECT_EQ(rows[0], kCsvHeader);
  const std::size_t cols = csv_fields(kCsvHeader).size();
  EXPECT_EQ(cols, 14u);
  for (const auto& r : rows) EXPECT_EQ(csv_fields(r).size(), cols) << r;
}

TEST(Report, MarkdownHasOneRowPerEntry) {
  const Json j = catalog_json(catalog_results(), RunConfig{});
  std::size_t rows = 0;
  for (const auto& l : lines(catalog_markdown(j))) rows += l.rfind("| ", 0) == 0;
  EXPECT_EQ(rows, builtin_catalog().size() + 1);  // plus header
}

TEST(Report, JsonRoundTrip) {
  for (const char* t : {"SO(3,2)/SO(3,1)", "GROUP(SU(2,1))", "SO_C(8)/SO(7,1)"}) {
    const Json j = analysis_json(analyze(parse_pair(t)));
    const std::string text = dump_json(j);
    EXPECT_EQ(dump_json(Json::parse(text)), text) << t;
    for (const char* key : {"pair", "embedding", "dims", "rank", "sign", "complexification", "homotopy",
                            "montecarlo", "bidegree", "classification", "reasons"})
      EXPECT_TRUE(j.contains(key)) << t << " " << key;
  }
}

TEST(Report, InfiniteZIsEncoded) {
  ClassifyOptions opts;
  opts.run_mc = true;
  opts.mc.n_samples = 200;
  const Json j = analysis_json(analyze(parse_pair("SL_R(3)/SO(3)"), opts));
  EXPECT_EQ(j["montecarlo"]["max_abs_z"], "Infinity");
  EXPECT_EQ(Json::parse(dump_json(j)), j);
}

TEST(Report, ByteDeterminism) {
  RunConfig one;
  one.threads = 1;
  RunConfig many;
  many.threads = 4;
  const std::string a = dump_json(catalog_json(run_catalog(builtin_catalog(), one), one));
  const std::string b = dump_json(catalog_json(run_catalog(builtin_catalog(), many), many));
  const std::string c = dump_json(catalog_json(catalog_results(), RunConfig{}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Report, McDeterminism) {
  ClassifyOptions opts;
  opts.run_mc = true;
  opts.mc.n_samples = 1000;
  const auto ps = parse_pair("SO(2,2)/SO(2,1)");
  EXPECT_EQ(dump_json(analysis_json(analyze(ps, opts))), dump_json(analysis_json(analyze(ps, opts))));
}

TEST(Report, Endomorphisms) {
  const GradedRing r = build_ring(make_space(SpaceFamily::CPn, {2}));
  EXPECT_EQ(parse_endomorphism(r, "id").per_degree[2](0, 0), 1);
  EXPECT_EQ(parse_endomorphism(r, "k=3").per_degree[4](0, 0), 9);
  EXPECT_EQ(parse_endomorphism(r, "k=-1/2").per_degree[4](0, 0), Rational(1, 4));
  for (const char* bad : {"", "k=", "k=x", "z=2", "k=1/0"}) EXPECT_THROW(parse_endomorphism(r, bad), ParseError) << bad;
  const Json j = lefschetz_json(make_space(SpaceFamily::CPn, {2}), "k=3");
  EXPECT_EQ(j["lefschetz_number"]["graph_pairing"], "13");
  EXPECT_EQ(j["lefschetz_number"]["trace_formula"], "13");
}

TEST(Config, DefaultsAndOverrides) {
  const RunConfig d;
  EXPECT_EQ(d.mc_samples, 20000u);
  EXPECT_EQ(d.seed, 0u);
  EXPECT_FALSE(d.run_mc);
  const RunConfig c = load_config_string("mc_samples = 500\nseed = 9\nformat = \"csv\"\nrun_mc = true\n");
  EXPECT_EQ(c.mc_samples, 500u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.format, OutputFormat::Csv);
  EXPECT_TRUE(c.run_mc);
  EXPECT_EQ(c.max_flips, d.max_flips);
  // a file layered on a base keeps the base where it is silent
  RunConfig base;
  base.max_flips = 2;
  EXPECT_EQ(load_config_string("seed = 1", base).max_flips, 2u);
  const ClassifyOptions o = c.classify_options();
  EXPECT_EQ(o.mc.n_samples, 500u);
  EXPECT_TRUE(o.run_mc);
}

TEST(Config, Validation) {
  for (const char* bad : {"mc_samples = 10", "mc_threshold_low = 5.0\nmc_threshold_high = 4.0", "mc_threshold_low = 0.0",
                          "bogus = 1", "seed = -1", "seed = \"x\"", "format = \"xml\"", "run_mc = 1", "seed = 1.5", "cache_dir = 3", "mc_samples = ["}) {
    try {
      load_config_string(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ConfigError) << bad;
    }
  }
  RunConfig c;
  c.mc_threshold_high = c.mc_threshold_low;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Config, EnvironmentVariable) {
  const fs::path dir = scratch_dir("env");
  const fs::path file = dir / "c.toml";
  std::ofstream(file) << "seed = 42\n";
  ::setenv("CKFORMS_CONFIG", file.c_str(), 1);
  EXPECT_EQ(config_from_environment().seed, 42u);
  ::unsetenv("CKFORMS_CONFIG");
  EXPECT_EQ(config_from_environment().seed, 0u);
  EXPECT_THROW(load_config_file((dir / "missing.toml").string()), Error);
  fs::remove_all(dir);
}

TEST(Config, CanonicalTracksResultFields) {
  RunConfig a, b;
  EXPECT_EQ(a.canonical(), b.canonical());
  b.threads = 7;  // no influence on results
  b.format = OutputFormat::Markdown;
  EXPECT_EQ(a.canonical(), b.canonical());
  b.seed = 1;
  EXPECT_NE(a.canonical(), b.canonical());
}

TEST(Cache, KeysAndRoundTrip) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  RunConfig cfg;
  const std::string k = cache_key("analyze", "SO(3,2)/SO(3,1)", cfg);
  EXPECT_EQ(k.size(), 64u);
  EXPECT_EQ(k, cache_key("analyze", "SO(3,2)/SO(3,1)", cfg));
  EXPECT_NE(k, cache_key("integrate", "SO(3,2)/SO(3,1)", cfg));
  EXPECT_NE(k, cache_key("analyze", "SO(3,4)/SO(3,2)", cfg));
  RunConfig other = cfg;
  other.seed = 5;
  EXPECT_NE(k, cache_key("analyze", "SO(3,2)/SO(3,1)", other));

  const fs::path dir = scratch_dir("cache");
  const ResultCache cache(dir.string());
  EXPECT_FALSE(cache.lookup(k).has_value());
  ClassifyOptions opts = cfg.classify_options();
  opts.run_mc = true;
  opts.mc.n_samples = 500;
  const Json computed = analysis_json(analyze(parse_pair("SO(3,2)/SO(3,1)"), opts));
  cache.store(k, computed);
  const auto hit = cache.lookup(k);
  ASSERT_TRUE(hit.has_value());
  const Json recomputed = analysis_json(analyze(parse_pair("SO(3,2)/SO(3,1)"), opts));
  EXPECT_EQ(dump_json(*hit), dump_json(recomputed));

  std::ofstream(cache.path_for(k)) << "{ truncated";
  EXPECT_FALSE(cache.lookup(k).has_value());
  fs::remove_all(dir);
}
