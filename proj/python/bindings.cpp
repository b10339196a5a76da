#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hfk/errors.hpp"
#include "hfk/homology.hpp"
#include "hfk/oracle.hpp"
#include "hfk/resolution.hpp"

namespace py = pybind11;
using namespace hfk;

namespace {

py::dict laurent_dict(const IntLaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.coeffs()) d[py::int_(e)] = c;
  return d;
}

py::dict compute(const std::string& braid, int degree_cap) {
  const auto w = parse_braid(braid);
  CubeOptions opts;
  opts.groebner.degree_cap = degree_cap;
  CubeComplex cube;
  PoincareTable table;
  IntLaurentPoly delta;
  {
    py::gil_scoped_release release;
    cube = assemble_cube(build_layered_diagram(w), opts);
    table = homology(cube);
    delta = burau_alexander(w);
  }
  py::list records;
  for (const auto& [key, dim] : table.normalized().dims)
    records.append(py::make_tuple(key.first, key.second, dim));
  py::dict out;
  out["braid"] = w.to_string();
  out["records"] = records;
  out["homological_shift"] = table.min_homological();
  out["total_dim"] = table.total();
  out["chain_dim"] = cube.total_dimension();
  out["euler"] = laurent_dict(table.euler());
  out["alexander"] = laurent_dict(delta);
  out["match"] = equal_up_to_unit(table.euler(), doubled_exponents(delta));
  return out;
}

std::vector<std::string> relations(const std::string& braid, std::optional<std::string> resolution,
                                   const std::string& method) {
  const auto d = build_layered_diagram(parse_braid(braid));
  const auto idx = resolution && *resolution != "singular" ? parse_resolution(*resolution, d.num_crossings())
                                                           : all_singular(d);
  const ResolvedGraph g(d, idx);
  std::vector<Relation> rels;
  if (method == "regions") rels = nonlocal_from_regions(g);
  else if (method == "cycles") rels = nonlocal_from_cycles(g);
  else if (method == "subsets") rels = nonlocal_from_subsets(g, true);
  else throw UsageError("unknown method '" + method + "'");
  for (auto& r : detect_closed_components(g)) rels.push_back(std::move(r));
  return canonical_set(rels);
}

py::dict check_invariance(const std::string& a, const std::string& b) {
  InvarianceReport rep;
  {
    py::gil_scoped_release release;
    rep = compare_invariance(parse_braid(a), parse_braid(b));
  }
  py::dict out;
  out["equal"] = rep.equal;
  out["first_shift"] = rep.first_shift;
  out["second_shift"] = rep.second_shift;
  out["differences"] = rep.differences;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knot Floer homology from braid closures over F2(t)";

  // Leaked on purpose: the translator may run until interpreter shutdown.
  static PyObject* error = py::exception<Error>(m, "HfkError", PyExc_RuntimeError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(error, e.what());
    }
  });

  m.def(
      "parse_braid",
      [](const std::string& text) {
        const auto w = parse_braid(text);
        return py::make_tuple(w.strands, w.letters);
      },
      py::arg("text"), "(strands, letters) of a braid word such as 'b=3; 1 -2 1 -2'");
  m.def(
      "alexander", [](const std::string& braid) { return laurent_dict(burau_alexander(parse_braid(braid))); },
      py::arg("braid"), "Alexander polynomial as {exponent: coefficient}");
  m.def("compute", &compute, py::arg("braid"), py::arg("degree_cap") = BuchbergerOptions{}.degree_cap,
        "reduced homology table; records are (doubled Alexander grading, homological grading, dim)");
  m.def("relations", &relations, py::arg("braid"), py::arg("resolution") = std::nullopt,
        py::arg("method") = "regions", "canonical non-local relations of one resolution");
  m.def("check_invariance", &check_invariance, py::arg("first"), py::arg("second"));
}
