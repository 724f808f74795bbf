#include "qrep/intertwiner.hpp"
#include "qrep/io.hpp"
#include "qrep/kronecker.hpp"
#include "qrep/models.hpp"
#include "qrep/operators.hpp"
#include "qrep/report.hpp"
#include "qrep/structure.hpp"
#include "qrep/subspace.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qrep;

namespace {

Tolerances make_tol(std::uint64_t seed, double tol_scale) {
  Tolerances t;
  t.seed = seed;
  t.scale = tol_scale;
  return t;
}

Representation make_rep(const std::vector<std::string>& vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                        const std::vector<Index>& dims, const std::vector<Matrix>& maps) {
  std::vector<Arrow> as;
  for (const auto& [name, src, dst] : arrows) as.push_back({name, src, dst});
  return Representation(Quiver(vertices, std::move(as)), dims, maps);
}

}  // namespace

PYBIND11_MODULE(_qrep, m) {
  m.doc() = "Quiver representations: Hom spaces, structure tests and model builders";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_MemoryError);

  py::class_<Representation>(m, "Representation")
      .def(py::init(&make_rep), py::arg("vertices"), py::arg("arrows"), py::arg("dims"),
           py::arg("maps"))
      .def_property_readonly("vertices", [](const Representation& r) { return r.quiver().vertices(); })
      .def_property_readonly("arrows",
                             [](const Representation& r) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& a : r.quiver().arrows())
                                 out.emplace_back(a.name, a.source, a.target);
                               return out;
                             })
      .def_property_readonly("dims", &Representation::dims)
      .def_property_readonly("maps", &Representation::maps)
      .def("total_dim", &Representation::total_dim)
      .def("to_json", [](const Representation& r) { return representation_to_json(r).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return representation_from_json(parse_json(text)); })
      .def("__repr__", [](const Representation& r) {
        std::string s = "Representation(dims=[";
        for (std::size_t v = 0; v < r.dims().size(); ++v)
          s += (v ? ", " : "") + r.quiver().vertices()[v] + ":" + std::to_string(r.dim(v));
        return s + "])";
      });

  m.def("build_model",
        [](const std::string& name, const Params& params) { return build_model(name, params).rep; },
        py::arg("name"), py::arg("params") = Params{});
  m.def("model_names", &model_names);

  m.def("hom",
        [](const Representation& a, const Representation& b, std::uint64_t seed, double scale) {
          return hom(a, b, make_tol(seed, scale)).basis;
        },
        py::arg("a"), py::arg("b"), py::arg("seed") = 0, py::arg("tol_scale") = 1.0,
        "Orthonormal basis of Hom(a, b); each element is a list of per-vertex matrices.");
  m.def("end_dim",
        [](const Representation& r, double scale) { return end(r, make_tol(0, scale)).dimension(); },
        py::arg("rep"), py::arg("tol_scale") = 1.0);
  m.def("are_isomorphic",
        [](const Representation& a, const Representation& b, std::uint64_t seed) {
          IsoResult r = are_isomorphic(a, b, make_tol(seed, 1.0));
          return py::make_tuple(to_string(r.verdict), r.witness);
        },
        py::arg("a"), py::arg("b"), py::arg("seed") = 0,
        "Returns (verdict, witness or None); verdict is 'yes', 'no' or 'probably_no'.");
  m.def("analyze",
        [](const Representation& r, std::uint64_t seed, double scale) {
          AnalysisReport rep = analyze(r, Json{{"source", "python"}, {"seed", seed}}, false,
                                       make_tol(seed, scale));
          return to_json(rep).dump();
        },
        py::arg("rep"), py::arg("seed") = 0, py::arg("tol_scale") = 1.0,
        "Analysis report as a JSON string.");
  m.def("is_indecomposable",
        [](const Representation& r, std::uint64_t seed) {
          return is_indecomposable(r, make_tol(seed, 1.0)).indecomposable;
        },
        py::arg("rep"), py::arg("seed") = 0);
  m.def("is_simple", [](const Representation& r) { return is_simple(r).simple; });
  m.def("is_transitive", [](const Representation& r) { return is_transitive(r); });
  m.def("is_irreducible", [](const Representation& r) { return is_irreducible(r).irreducible; });
  m.def("is_strongly_irreducible",
        [](const Matrix& a) { return is_strongly_irreducible(a).strongly_irreducible; });
  m.def("decompose",
        [](const Representation& r, std::uint64_t seed) {
          return decompose(r, make_tol(seed, 1.0)).leaves();
        },
        py::arg("rep"), py::arg("seed") = 0, "Indecomposable summands.");
  m.def("direct_sum", &direct_sum);

  m.def("remove_loops", [](const Representation& r) { return remove_loops(r); });
  m.def("system_end_dim_of_rep", [](const Representation& r) {
    return system_end(rep_to_system(remove_loops(r))).dimension();
  });
  m.def("system_end_dim_of_operator",
        [](const Matrix& a) { return system_end(from_operator(a)).dimension(); });
  m.def("commutant_dim", [](const Matrix& a) { return commutant_dim(a); });

  m.def("shift", &shift);
  m.def("jordan_block", &jordan_block);
  m.def("hrr_max_admissible_n", &hrr_max_admissible_n, py::arg("lambda_"),
        py::arg("weight_floor") = 1e-8);
  m.def("sweep_csv",
        [](const std::string& model, const std::string& n_range,
           const std::vector<std::string>& grid, int jobs) {
          SweepSpec spec{model, expand_grid(grid), parse_n_range(n_range), jobs};
          std::string text = std::string(kSweepCsvHeader) + "\n";
          for (const auto& row : run_sweep(spec)) text += sweep_row_csv(row) + "\n";
          return text;
        },
        py::arg("model"), py::arg("n_range"), py::arg("grid") = std::vector<std::string>{},
        py::arg("jobs") = 1);
}
