#include "ckforms/catalog.hpp"

#include <atomic>
#include <thread>

#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "toml.hpp"

namespace ckforms {

namespace {

CatalogEntry entry(const char* id, const char* pair, const char* label, Classification c) {
  return {id, pair, parse_pair(pair), label, c};
}

std::vector<CatalogEntry> make_builtin() {
  using C = Classification;
  const char* hpq = "SO(p,q+r)/SO(p,q), p odd";
  const char* slr = "SL(n,R)/SL(m,R), m even";
  const char* cx_so = "SO(p+q,C)/SO(p,q)";
  const char* cx_su = "SL(p+q,C)/SU(p,q), p,q>0";
  const char* cx_sp = "Sp(p+q,C)/Sp(p,q)";
  const char* cx_star = "SO(2n,C)/SO*(2n)";
  const char* hom_r = "SL(p+q,R)/SO(p,q), p,q>1";
  const char* hom_h = "SL(p+q,H)/Sp(p,q), p,q>1";
  const char* rank = "SO(p,q+r)/SO(p,q), p and q odd";
  const char* vol_so = "SO(p,q+1)/SO(p,q), p even, q>0";
  const char* vol_sl = "SL(2k,R)/SL(2k-1,R)";
  const char* vol_grp = "group space of a Hermitian group";
  return {
      entry("hpq-odd-1", "SO(1,2)/SO(1,1)", hpq, C::NoCompactForms),
      entry("hpq-odd-2", "SO(3,2)/SO(3,1)", hpq, C::NoCompactForms),
      entry("hpq-odd-3", "SO(3,4)/SO(3,2)", hpq, C::NoCompactForms),
      entry("slr-even-1", "SL_R(3)/SL_R(2)", slr, C::NoCompactForms),
      entry("slr-even-2", "SL_R(4)/SL_R(2)", slr, C::NoCompactForms),
      entry("slr-even-3", "SL_R(6)/SL_R(4)", slr, C::NoCompactForms),
      entry("cx-so-1", "SO_C(4)/SO(2,2)", cx_so, C::NoCompactForms),
      entry("cx-so-2", "SO_C(3)/SO(1,2)", cx_so, C::NoCompactForms),
      entry("cx-so-3", "SO_C(5)/SO(3,2)", cx_so, C::NoCompactForms),
      entry("cx-su-1", "SL_C(2)/SU(1,1)", cx_su, C::NoCompactForms),
      entry("cx-su-2", "SL_C(3)/SU(2,1)", cx_su, C::NoCompactForms),
      entry("cx-sp-1", "SP_C(2)/SP(1,1)", cx_sp, C::NoCompactForms),
      entry("cx-star-1", "SO_C(4)/SOSTAR(4)", cx_star, C::NoCompactForms),
      entry("cx-star-2", "SO_C(6)/SOSTAR(6)", cx_star, C::NoCompactForms),
      entry("hom-r-1", "SL_R(4)/SO(2,2)", hom_r, C::NoCompactForms),
      entry("hom-r-2", "SL_R(5)/SO(3,2)", hom_r, C::NoCompactForms),
      entry("hom-h-1", "SL_H(4)/SP(2,2)", hom_h, C::NoCompactForms),
      entry("rank-1", "SO(1,4)/SO(1,3)", rank, C::NoCompactForms),
      entry("rank-2", "SO(3,4)/SO(3,3)", rank, C::NoCompactForms),
      entry("vol-so-1", "SO(2,2)/SO(2,1)", vol_so, C::RationalVolume),
      entry("vol-so-2", "SO(4,2)/SO(4,1)", vol_so, C::RationalVolume),
      entry("vol-sl-1", "SL_R(4)/SL_R(3)", vol_sl, C::RationalVolume),
      entry("vol-sl-2", "SL_R(6)/SL_R(5)", vol_sl, C::RationalVolume),
      entry("vol-grp-1", "GROUP(SU(2,1))", vol_grp, C::RationalVolume),
      entry("vol-grp-2", "GROUP(SL_R(2))", vol_grp, C::RationalVolume),
      entry("vol-grp-3", "GROUP(SU(3,1))", vol_grp, C::RationalVolume),
      entry("open-1", "SO_C(8)/SO(7,1)", "SO(n+1,C)/SO(n,1), no obstruction fires", C::Unknown),
      entry("open-2", "SL_R(5)/SL_R(3)", "SL(n,R)/SL(m,R), m odd: outside the implemented obstructions", C::Unknown),
  };
}

std::vector<CatalogEntry> from_table(const toml::table& t) {
  const toml::array* arr = t["entry"].as_array();
  if (!arr) throw Error(ErrorKind::ConfigError, "catalog file needs [[entry]] tables");
  std::vector<CatalogEntry> out;
  for (const auto& node : *arr) {
    const toml::table* e = node.as_table();
    if (!e) throw Error(ErrorKind::ConfigError, "catalog entry is not a table");
    auto str = [&](const char* key) {
      const auto v = (*e)[key].value<std::string>();
      if (!v || v->empty()) throw Error(ErrorKind::ConfigError, std::string("catalog entry missing '") + key + "'");
      return *v;
    };
    CatalogEntry c;
    c.id = str("id");
    c.pair_text = str("pair");
    c.pair = parse_pair(c.pair_text);
    c.label = str("label");
    const auto cls = parse_classification(str("expected"));
    if (!cls) throw Error(ErrorKind::ConfigError, "bad expected classification in entry " + c.id);
    c.expected = *cls;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> c = make_builtin();
  return c;
}

std::vector<CatalogEntry> load_catalog_string(const std::string& text) {
  try {
    return from_table(toml::parse(text));
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("invalid catalog TOML: ") + std::string(e.description()));
  }
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  try {
    return from_table(toml::parse_file(path));
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::ConfigError, path + ": " + std::string(e.description()));
  }
}

std::vector<CatalogResult> run_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg) {
  cfg.validate();
  const ClassifyOptions opts = cfg.classify_options();
  std::vector<CatalogResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      results[i].entry = entries[i];
      try {
        results[i].analysis = analyze(entries[i].pair, opts);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(entries.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

std::size_t mismatch_count(const std::vector<CatalogResult>& results) {
  std::size_t n = 0;
  for (const auto& r : results) n += r.match() ? 0 : 1;
  return n;
}

}  // namespace ckforms
