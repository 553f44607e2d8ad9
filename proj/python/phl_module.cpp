#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phl/error.hpp"
#include "phl/fixtures.hpp"
#include "phl/io.hpp"

namespace py = pybind11;
using phl::io::json;

namespace {

phl::Poset load(const std::string& ref) { return phl::io::load_poset(ref); }

std::string witness_doc(const phl::WitnessReport& w) {
  json out{{"verdict", std::string(phl::to_string(w.verdict))}, {"bound", w.bound}, {"checked_classes", w.checked_classes}};
  if (w.witness) {
    out["witness"] = json{{"P", phl::io::poset_to_json(w.witness->p)},
                          {"count_r", w.witness->r_count},
                          {"count_s", w.witness->s_count}};
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_phl, m) {
  m.doc() = "Finite poset homomorphism counting and order certificates";

  static PyObject* error_type = py::exception<phl::Error>(m, "PhlError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const phl::Error& e) {
      PyErr_SetString(error_type, e.what());
    }
  });

  py::class_<phl::Poset>(m, "Poset")
      .def(py::init([](const std::string& ref) { return load(ref); }), py::arg("ref"))
      .def_static("from_json", [](const std::string& doc) { return phl::io::poset_from_json(json::parse(doc)); })
      .def("to_json", [](const phl::Poset& p) { return phl::io::poset_to_json(p).dump(); })
      .def("__len__", &phl::Poset::size)
      .def_property_readonly("labels", &phl::Poset::labels)
      .def("leq", [](const phl::Poset& p, const std::string& a, const std::string& b) {
        return p.leq(p.index(a), p.index(b));
      })
      .def("covers", [](const phl::Poset& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
        return out;
      })
      .def("is_connected", [](const phl::Poset& p) { return phl::is_connected(p); })
      .def("class_name", [](const phl::Poset& p) { return phl::class_name(p); })
      .def("to_dot", [](const phl::Poset& p) { return phl::to_dot(p); })
      .def("__add__", [](const phl::Poset& p, const phl::Poset& q) { return phl::direct_sum(p, q); })
      .def("__repr__", [](const phl::Poset& p) { return "<Poset " + phl::class_name(p) + ">"; });

  m.def("is_isomorphic", &phl::is_isomorphic);
  m.def("count", [](const std::string& kind, const phl::Poset& p, const phl::Poset& q) {
    return phl::count(phl::parse_hom_kind(kind), p, q);
  }, py::arg("kind"), py::arg("p"), py::arg("q"));
  m.def("brute_force_count", [](const std::string& kind, const phl::Poset& p, const phl::Poset& q) {
    return phl::brute_force_count(phl::parse_hom_kind(kind), p, q);
  }, py::arg("kind"), py::arg("p"), py::arg("q"));
  m.def("enumerate", [](const std::string& kind, const phl::Poset& p, const phl::Poset& q) {
    std::vector<std::vector<std::size_t>> out;
    phl::for_each_map(phl::parse_hom_kind(kind), p, q, [&](std::span<const std::size_t> f) {
      out.emplace_back(f.begin(), f.end());
      return true;
    });
    return out;
  }, py::arg("kind"), py::arg("p"), py::arg("q"));
  m.def("count_sro", &phl::count_sro);
  m.def("matrices_json", [](const std::vector<phl::Poset>& targets) {
    const auto fm = phl::factor_matrices(targets);
    auto block = [](const phl::CountMatrix& c) {
      return json{{"rows", c.row_names}, {"cols", c.col_names}, {"cells", c.cells}};
    };
    return json{{"sro", block(fm.sro)}, {"emb", block(fm.emb)}, {"strict", block(fm.strict)}}.dump();
  });
  m.def("check_gle_json", [](const phl::Poset& r, const phl::Poset& s, std::size_t bound) {
    return witness_doc(phl::bounded_gle_check(r, s, bound));
  }, py::arg("r"), py::arg("s"), py::arg("bound") = 5);
  m.def("witness_json", [](const phl::Poset& r, const phl::Poset& s) {
    const auto w = phl::witness_search(r, s);
    return json{{"P", phl::io::poset_to_json(w.p)}, {"count_r", w.r_count}, {"count_s", w.s_count}}.dump();
  });
  m.def("verify_certificate_json", [](const std::string& doc, std::size_t bound) {
    const auto report = phl::verify_certificate(phl::io::certificate_from_json(json::parse(doc)), bound);
    return json{{"verdict", std::string(phl::to_string(report.verdict))}, {"summary", report.summary()}}.dump();
  }, py::arg("doc"), py::arg("bound") = 6);
  m.def("construct_sum_json", [](const std::string& doc, std::size_t bound) {
    const auto report = phl::theorem3_pipeline(phl::io::spec_from_json(json::parse(doc)), bound);
    json obs = json::array();
    for (const auto& ob : report.obligations) {
      obs.push_back(json{{"E", ob.name}, {"emb_R", ob.emb_r}, {"emb_S", ob.emb_s}, {"holds", ob.holds}});
    }
    return json{{"T", phl::io::poset_to_json(report.result.t)}, {"obligations", obs}}.dump();
  }, py::arg("doc"), py::arg("bound") = 4);
  m.def("ev_jsonl", [](const phl::Poset& p) { return phl::io::ev_to_jsonl(phl::build_ev(p)); });
  m.def("ev_size", [](const phl::Poset& p) { return phl::build_ev(p).size(); });
  m.def("selftest", [](std::size_t bound) {
    std::ostringstream out;
    const bool ok = phl::fixtures::selftest(out, bound);
    return std::make_pair(ok, out.str());
  }, py::arg("bound") = 6);
}
