#include <pybind11/pybind11.h>

#include "ckforms/catalog.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "ckforms/report.hpp"

namespace py = pybind11;
using namespace ckforms;

namespace {

RunConfig config_of(const std::string& toml_text) {
  return toml_text.empty() ? RunConfig{} : load_config_string(toml_text);
}

// heavy work runs without the GIL
template <class F>
std::string released(F&& f) {
  py::gil_scoped_release nogil;
  return dump_json(f());
}

}  // namespace

PYBIND11_MODULE(_ckforms, m) {
  m.doc() = "exact obstructions to compact Clifford-Klein forms";

  // message starts with the error kind, e.g. "ParseError: ..."
  py::register_exception<Error>(m, "CkformsError", PyExc_ValueError);

  m.def("version", [] { return std::string(version_tag()); });
  m.def("parse_pair", [](const std::string& s) { return parse_pair(s).to_string(); }, py::arg("text"));
  m.def(
      "analyze",
      [](const std::string& pair, bool mc, const std::string& cfg_text) {
        RunConfig cfg = config_of(cfg_text);
        if (mc) cfg.run_mc = true;
        const PairSpec ps = parse_pair(pair);
        return released([&] { return analysis_json(analyze(ps, cfg.classify_options())); });
      },
      py::arg("pair"), py::arg("mc") = false, py::arg("config") = "");
  m.def(
      "catalog",
      [](const std::string& cfg_text, const std::string& catalog_text) {
        const RunConfig cfg = config_of(cfg_text);
        const auto entries = catalog_text.empty() ? builtin_catalog() : load_catalog_string(catalog_text);
        return released([&] { return catalog_json(run_catalog(entries, cfg), cfg); });
      },
      py::arg("config") = "", py::arg("catalog") = "");
  m.def(
      "integrate",
      [](const std::string& pair, std::size_t n, std::uint64_t seed, std::size_t list) {
        const PairSpec ps = parse_pair(pair);
        return released([&] {
          AverageOptions o;
          o.n_samples = n;
          o.seed = seed;
          Json j;
          j["pair"] = ps.to_string();
          j.update(integration_json(average_form(embed_pair(ps), o), list));
          return j;
        });
      },
      py::arg("pair"), py::arg("n") = 20000, py::arg("seed") = 0, py::arg("list") = 64);
  m.def("cohomology", [](const std::string& s) { return dump_json(cohomology_json(parse_space(s))); },
        py::arg("space"));
  m.def(
      "lefschetz",
      [](const std::string& s, const std::string& endo) {
        const SymSpaceProduct sp = parse_space(s);
        if (sp.factors.size() != 1) throw Error(ErrorKind::UnsupportedSpace, "need a single factor");
        return dump_json(lefschetz_json(sp.factors[0], endo));
      },
      py::arg("space"), py::arg("endo"));
}
