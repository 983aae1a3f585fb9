// Python module hamdec._core: construction, verification and certificate I/O.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamdec/certio.hpp"
#include "hamdec/countmatrix.hpp"
#include "hamdec/d7boundary.hpp"
#include "hamdec/prefix.hpp"
#include "hamdec/synthesis.hpp"
#include "hamdec/verify.hpp"

namespace py = pybind11;
using namespace hamdec;

namespace {

py::dict report_dict(const VerificationReport& rep) {
  py::dict out;
  out["d"] = rep.params.d;
  out["m"] = rep.params.m;
  out["mode"] = mode_name(rep.mode);
  out["recipe_kind"] = rep.recipe_kind;
  out["passed"] = rep.passed;
  out["resource_limited"] = rep.resource_limited;
  out["arc_partition"] = rep.arc_partition;
  out["cycle_lengths"] = rep.cycle_lengths;
  py::list checks;
  for (const CheckResult& c : rep.checks) checks.append(py::make_tuple(c.name, c.ok, c.detail));
  out["checks"] = checks;
  out["notes"] = rep.notes;
  py::list kids;
  for (const auto& k : rep.children) kids.append(report_dict(k));
  out["children"] = kids;
  return out;
}

std::vector<std::vector<std::int64_t>> rows_of(const CountMatrix& N) { return N.n; }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Hamilton decompositions of the directed torus D_d(m)";

  // args = (kind, message); kind is the hyphenated error-kind name.
  static py::exception<Error> error(mod, "HamdecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(error_kind_name(e.kind()), e.what()).ptr());
    }
  });

  py::class_<Decomposition>(mod, "Decomposition")
      .def_property_readonly("d", [](const Decomposition& dec) { return dec.params.d; })
      .def_property_readonly("m", [](const Decomposition& dec) { return dec.params.m; })
      .def_property_readonly("recipe_kind", [](const Decomposition& dec) { return dec.recipe.kind; })
      .def("recipe_json", [](const Decomposition& dec) { return recipe_to_json(dec.recipe).dump(); })
      .def("direction",
           [](const Decomposition& dec, const std::vector<Residue>& x, int color) {
             if (static_cast<int>(x.size()) != dec.params.d) fail(ErrorKind::InvalidInput, "vertex has the wrong dimension");
             if (color < 0 || color >= dec.params.d) fail(ErrorKind::InvalidInput, "colour out of range");
             for (Residue v : x)
               if (v >= dec.params.m) fail(ErrorKind::InvalidInput, "coordinate out of range");
             return static_cast<int>(dec.direction(x, color));
           })
      .def("directions_at", [](const Decomposition& dec, const std::vector<Residue>& x) {
        if (static_cast<int>(x.size()) != dec.params.d) fail(ErrorKind::InvalidInput, "vertex has the wrong dimension");
        for (Residue v : x)
          if (v >= dec.params.m) fail(ErrorKind::InvalidInput, "coordinate out of range");
        std::vector<Direction> out(dec.params.d);
        dec.directions_at(x, out);
        return std::vector<int>(out.begin(), out.end());
      });

  mod.def("plan", [](int d, Residue m, const std::string& strategy) { return plan(d, m, parse_strategy(strategy)).to_json().dump(); },
          py::arg("d"), py::arg("m"), py::arg("strategy") = "standard");
  mod.def(
      "synthesize",
      [](int d, Residue m, const std::string& strategy) {
        SynthesisOptions opt;
        opt.strategy = parse_strategy(strategy);
        py::gil_scoped_release release;
        return synthesize(d, m, opt);
      },
      py::arg("d"), py::arg("m"), py::arg("strategy") = "standard");
  mod.def(
      "verify",
      [](const Decomposition& dec, const std::string& mode, std::uint64_t budget) {
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = verify(dec, parse_mode(mode), budget, default_jobs());
        }
        return report_dict(rep);
      },
      py::arg("dec"), py::arg("mode") = "automatic", py::arg("budget") = default_budget());
  mod.def("direction_table", [](const Decomposition& dec) {
    const auto t = direction_table(dec);
    return std::vector<int>(t.begin(), t.end());
  });

  mod.def(
      "export_decomposition",
      [](const Decomposition& dec, bool explicit_table) {
        return export_decomposition(dec, explicit_table ? ExportKind::explicit_table : ExportKind::recipe).dump();
      },
      py::arg("dec"), py::arg("explicit_table") = false);
  mod.def("import_decomposition", [](const std::string& text) { return import_decomposition(Json::parse(text)); });
  mod.def("report_json", [](const Decomposition& dec, const std::string& mode) {
    return canonical(export_report(verify(dec, parse_mode(mode)))).dump();
  });

  mod.def("check_prefix_counts", [](const std::vector<std::int64_t>& row, Residue m, std::int64_t length) {
    const CountCheck c = check_prefix_counts(LabelCounts::from_row(row), m, length);
    return py::make_tuple(c.ok, c.reason);
  });
  mod.def("gale_ryser_check", [](const std::vector<int>& rows, const std::vector<int>& cols) {
    return gale_ryser_check({rows, cols});
  });
  mod.def("d7_matrix", [](Residue m) { return rows_of(d7_matrix(m)); });
  mod.def("high_modulus_matrix", [](int d, Residue m) { return rows_of(high_modulus_matrix(d, m)); });
  mod.def("mc7_check", [](Residue m) {
    const Mc7Report r = mc7_check(m);
    py::dict out;
    out["latin"] = r.latin;
    out["exact_cover"] = r.exact_cover;
    out["six_zero_masks_absent"] = r.six_zero_masks_absent;
    out["states"] = r.states;
    return out;
  });
}
