#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/principle.hpp"
#include "mlat/text_format.hpp"
#include "mlat/zn.hpp"

namespace py = pybind11;
using namespace mlat;

namespace {

std::vector<std::string> labels_of(const MultLattice& m, ElementSet set) {
  std::vector<std::string> out;
  for (Element e : set) out.push_back(m.lattice().label(e));
  return out;
}

py::list witness_of(const MultLattice& m, const std::vector<Binding>& witness) {
  py::list out;
  for (const auto& b : witness) {
    out.append(py::make_tuple(b.role, b.value < m.size() ? m.lattice().label(b.value) : std::to_string(b.value)));
  }
  return out;
}

py::dict verdict_dict(const MultLattice& m, const Verdict& v) {
  py::dict d;
  d["outcome"] = std::string(to_string(v.outcome));
  d["reason"] = v.reason;
  d["witness"] = witness_of(m, v.witness);
  return d;
}

py::dict report_dict(const MultLattice& m, const TheoremReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["status"] = std::string(to_string(r.status));
  d["tsv"] = to_tsv(m.lattice(), r);
  d["note"] = r.note;
  d["conclusion"] = verdict_dict(m, r.conclusion);
  return d;
}

MClosedSet s_of(const MultLattice& m, const std::vector<std::string>& labels) {
  return validate_mclosed(m, parse_element_set(m.lattice(), labels));
}

ElementFamily family_of(const MultLattice& m, const std::vector<std::string>& labels) {
  return {parse_element_set(m.lattice(), labels)};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Finite multiplicative lattices, S-prime elements and S-Ako/S-Oka families";

  static py::exception<Error> error(mod, "MlatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<MultLattice>(mod, "MultLattice")
      .def_property_readonly("name", &MultLattice::name)
      .def_property_readonly("labels", [](const MultLattice& m) { return m.lattice().labels(); })
      .def_property_readonly("mult_class", [](const MultLattice& m) { return std::string(to_string(m.mult_class())); })
      .def("leq", [](const MultLattice& m, const std::string& a, const std::string& b) {
        return m.leq(m.lattice().at(a), m.lattice().at(b));
      })
      .def("mul", [](const MultLattice& m, const std::string& a, const std::string& b) {
        return m.lattice().label(m.mul(m.lattice().at(a), m.lattice().at(b)));
      })
      .def("residual", [](const MultLattice& m, const std::string& a, const std::string& b) {
        return m.lattice().label(m.residual(m.lattice().at(a), m.lattice().at(b)));
      })
      .def("spec_s", [](const MultLattice& m, const std::vector<std::string>& s) {
        return labels_of(m, spec_s(m, s_of(m, s)));
      }, py::arg("s"))
      .def("is_sprime", [](const MultLattice& m, const std::vector<std::string>& s, const std::string& p) {
        return verdict_dict(m, is_sprime(m, s_of(m, s), m.lattice().at(p)));
      }, py::arg("s"), py::arg("p"))
      .def("is_s_ako", [](const MultLattice& m, const std::vector<std::string>& f, const std::vector<std::string>& s) {
        return verdict_dict(m, is_s_ako(m, family_of(m, f), s_of(m, s)));
      }, py::arg("family"), py::arg("s"))
      .def("is_s_oka", [](const MultLattice& m, const std::vector<std::string>& f, const std::vector<std::string>& s) {
        return verdict_dict(m, is_s_oka(m, family_of(m, f), s_of(m, s)));
      }, py::arg("family"), py::arg("s"))
      .def("max_complement", [](const MultLattice& m, const std::vector<std::string>& f) {
        return labels_of(m, max_complement(m, family_of(m, f)));
      })
      .def("suite", [](const MultLattice& m, std::size_t samples, std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_theorem_suite(m, {.samples = samples, .seed = seed})) out.append(report_dict(m, r));
        return out;
      }, py::arg("samples") = 2000, py::arg("seed") = 0x5eed)
      .def("audit", [](const MultLattice& m) {
        const AuditResult a = exhaustive_audit(m);
        py::dict d;
        d["instances"] = a.instances;
        d["vacuous"] = a.vacuous;
        d["not_applicable"] = a.not_applicable;
        d["failures"] = a.failures;
        d["supplement_failures"] = a.supplement_failures;
        return d;
      })
      .def("to_text", [](const MultLattice& m) { return write_lattice_file(m); });

  mod.def("builtin", &builtin, py::arg("name"));
  mod.def("ideal_lattice", &ideal_lattice, py::arg("n"));
  mod.def("parse", [](const std::string& text) { return load_mult_lattice(parse_lattice_file(text)); }, py::arg("text"));
  mod.def("ring_colon", &ring_colon, py::arg("n"), py::arg("a"), py::arg("b"));
  mod.def("crosscheck", [](unsigned n, const std::vector<unsigned>& s, std::size_t samples) {
    const TheoremReport r = crosscheck(n, s, {.samples = samples});
    return report_dict(ideal_lattice(n), r);
  }, py::arg("n"), py::arg("s"), py::arg("samples") = 200);
  mod.def("search_multiplications", [](const MultLattice& m, const std::string& level) {
    const auto parsed = parse_search_level(level);
    if (!parsed) throw Error(ErrorCode::BadParams, "unknown level '" + level + "'");
    const SearchResult r = search_multiplications(m.lattice(), {.level = *parsed});
    return py::make_tuple(r.count, r.complete);
  }, py::arg("lattice"), py::arg("level") = "multiplicative");
}
