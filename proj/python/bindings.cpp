// Python bindings.  Results cross the boundary as JSON text; the package
// wrapper decodes them.  Exact coefficients stay exact (big integers and
// rationals are strings).

#include "heckecs/acceptance.hpp"
#include "heckecs/characters.hpp"
#include "heckecs/verify.hpp"
#include "heckecs/version.hpp"
#include "heckecs/weyl.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace heckecs;
using json = nlohmann::ordered_json;

namespace {

Labels checked_labels(const RootDatum& d, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != d.nodes())
    throw std::invalid_argument("labels need " + std::to_string(d.nodes()) + " entries for " + d.name());
  return Labels(labels.begin(), labels.end());
}

Coords checked_coords(const RootDatum& d, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != d.nodes())
    throw std::invalid_argument("coordinates need " + std::to_string(d.nodes()) + " entries for " + d.name());
  Coords out{};
  std::copy(c.begin(), c.end(), out.begin());
  return out;
}

std::string roots(const std::string& spec, int depth) {
  const DatumPtr d = RootDatum::make(spec);
  json arr = json::array();
  for (const Coroot& r : d->positive_coroots_up_to(depth))
    arr.push_back(json{{"coords", coords_json(r.coords, d->nodes())},
                       {"kind", r.kind == RootKind::Real ? "real" : "imaginary"},
                       {"multiplicity", r.multiplicity}});
  return arr.dump();
}

std::string info(const std::string& spec) {
  const DatumPtr d = RootDatum::make(spec);
  json j;
  j["spec"] = d->name();
  j["spec_hash"] = d->hash();
  j["nodes"] = d->nodes();
  j["affine"] = d->affine();
  j["cartan"] = d->cartan().rows();
  j["exponents"] = d->exponents();
  if (d->affine()) j["imaginary"] = coords_json(d->imaginary(), d->nodes());
  return j.dump();
}

std::string weyl_layers(const std::string& spec, int max_length) {
  const DatumPtr d = RootDatum::make(spec);
  json arr = json::array();
  for (const auto& layer : enumerate_layers(*d, max_length)) {
    json words = json::array();
    for (const WeylElement& w : layer) {
      json word = json::array();
      for (int g : w.word) word.push_back(g + 1);
      words.push_back(word);
    }
    arr.push_back(words);
  }
  return arr.dump();
}

std::string character(const std::string& spec, const std::vector<int>& labels, int depth) {
  const DatumPtr d = RootDatum::make(spec);
  return weyl_kac_character(d, checked_labels(*d, labels), depth).to_json().dump();
}

std::string whittaker(const std::string& spec, const std::vector<int>& labels, std::optional<int> depth, int margin) {
  const DatumPtr d = RootDatum::make(spec);
  RunOptions o;
  o.margin = margin;
  const WhittakerValue w = whittaker_normalized(d, checked_labels(*d, labels), depth, o);
  json r;
  r["prefactor"] = kWhittakerPrefactor;
  r["stabilized"] = w.stabilized;
  r["achieved_L"] = w.achieved_length;
  r["series"] = w.series.to_json();
  return r.dump();
}

std::string verify_finite(const std::string& spec, const std::vector<int>& labels) {
  const DatumPtr d = RootDatum::make(spec);
  return verify_finite_cs(d, checked_labels(*d, labels)).to_json(false).dump();
}

std::string verify_affine(const std::string& spec, const std::vector<int>& labels, int depth,
                          const std::vector<std::string>& qs) {
  const DatumPtr d = RootDatum::make(spec);
  AffineCsOptions o;
  o.depth = depth;
  for (const auto& q : qs) o.qs.push_back(parse_rational(q));
  return verify_affine_cs(d, checked_labels(*d, labels), o).to_json(false).dump();
}

std::string verify_gk(const std::string& spec, const std::vector<int>& nu, int depth) {
  const DatumPtr d = RootDatum::make(spec);
  GkLimitOptions o;
  o.depth = depth;
  return verify_gk_limit(d, checked_coords(*d, nu), o).to_json(false).dump();
}

std::string verify_hecke(const std::string& spec, int count, std::uint64_t seed) {
  return verify_hecke_relations(RootDatum::make(spec), count, seed).to_json(false).dump();
}

std::string run_acceptance(std::uint64_t seed) {
  acceptance::Options o;
  o.seed = seed;
  py::gil_scoped_release release;
  return acceptance::run(o).to_json(true).dump();
}

}  // namespace

PYBIND11_MODULE(_heckecs, m) {
  m.attr("__version__") = kVersion;
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  m.def("info", &info, py::arg("spec"));
  m.def("roots", &roots, py::arg("spec"), py::arg("depth"));
  m.def("weyl_layers", &weyl_layers, py::arg("spec"), py::arg("max_length"));
  m.def("character", &character, py::arg("spec"), py::arg("labels"), py::arg("depth"));
  m.def("whittaker", &whittaker, py::arg("spec"), py::arg("labels"), py::arg("depth") = py::none(),
        py::arg("margin") = 2);
  m.def("verify_finite_cs", &verify_finite, py::arg("spec"), py::arg("labels"));
  m.def("verify_affine_cs", &verify_affine, py::arg("spec"), py::arg("labels"), py::arg("depth") = 6,
        py::arg("qs") = std::vector<std::string>{});
  m.def("verify_gk_limit", &verify_gk, py::arg("spec"), py::arg("nu"), py::arg("depth") = 6);
  m.def("verify_hecke_relations", &verify_hecke, py::arg("spec"), py::arg("count") = 100,
        py::arg("seed") = acceptance::kDefaultSeed);
  m.def("run_acceptance", &run_acceptance, py::arg("seed") = acceptance::kDefaultSeed);
}
