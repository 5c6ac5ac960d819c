#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"
#include "altexp/finite_transform.hpp"
#include "altexp/hermite.hpp"
#include "altexp/verify.hpp"

namespace py = pybind11;
using namespace altexp;

namespace {

// Python dict keys must be hashable, so integer keys travel as tuples.
template <class Tag>
KeyedValues<Tag> to_keyed(const py::dict& entries, int n, int N) {
  KeyedValues<Tag> values(n, N);
  for (const auto& [k, v] : entries) values.set(k.template cast<std::vector<int>>(), v.template cast<Complex>());
  return values;
}

template <class Tag>
py::dict from_keyed(const KeyedValues<Tag>& values) {
  py::dict out;
  for (const auto& [k, v] : values.values()) out[py::tuple(py::cast(k))] = v;
  return out;
}

std::vector<std::vector<int>> group_elements(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& w : alternating_group(n).elements()) out.emplace_back(w.images().begin(), w.images().end());
  return out;
}

py::dict report_to_dict(const VerifyReport& report) {
  py::list checks;
  for (const auto& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["residual"] = c.residual;
    d["tolerance"] = c.tolerance;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["passed"] = report.all_passed();
  out["seconds"] = report.seconds;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alternating multivariate exponential functions and their transforms";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());

  // alternating group
  m.def("alternating_group", &group_elements, py::arg("n"),
        "Even permutations of degree n as zero-based image lists, in lexicographic order.");
  m.def("alternating_group_order", &alternating_group_order, py::arg("n"));
  m.def(
      "stabilizer_order", [](const std::vector<double>& v) { return stabilizer_order(std::span<const double>(v)); },
      py::arg("weight"));
  m.def(
      "is_semidominant", [](const std::vector<double>& v) { return is_semidominant(std::span<const double>(v)); },
      py::arg("weight"));
  m.def(
      "semidominant_normalize",
      [](const std::vector<double>& v) {
        const auto r = semidominant_normalize(Weight(v));
        const auto images = r.permutation.images();
        return py::make_tuple(r.weight.vector(), std::vector<int>(images.begin(), images.end()));
      },
      py::arg("weight"), "Returns (normalized weight, even permutation mapping the input onto it).");
  m.def(
      "affine_reduce",
      [](const std::vector<double>& x) {
        const auto r = affine_reduce(Point(x));
        const auto images = r.permutation.images();
        return py::make_tuple(r.reduced.vector(), std::vector<int>(images.begin(), images.end()), r.shift);
      },
      py::arg("x"), "Returns (x0, permutation, integer shift) with x = apply(permutation, x0) + shift.");

  // exponential functions
  m.def(
      "eval_E", [](const std::vector<double>& l, const std::vector<double>& x) { return eval_E(Weight(l), Point(x)); },
      py::arg("weight"), py::arg("x"));
  m.def(
      "eval_E_plus",
      [](const std::vector<double>& l, const std::vector<double>& x) { return eval_E_plus(Weight(l), Point(x)); },
      py::arg("weight"), py::arg("x"));
  m.def(
      "eval_E_minus",
      [](const std::vector<double>& l, const std::vector<double>& x) { return eval_E_minus(Weight(l), Point(x)); },
      py::arg("weight"), py::arg("x"));
  m.def(
      "laplace_eigenvalues", [](const std::vector<double>& l) { return laplace_spectrum(Weight(l)).eigenvalues; },
      py::arg("weight"));

  // finite transform
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int, int>(), py::arg("n"), py::arg("N"))
      .def_property_readonly("n", &GridSpec::dimension)
      .def_property_readonly("N", &GridSpec::density)
      .def_property_readonly("group_order", &GridSpec::group_order)
      .def_property_readonly("points", &GridSpec::semidominant_points)
      .def_property_readonly("index_set", [](const GridSpec& g) {
        std::vector<std::vector<int>> out;
        for (const auto& w : g.index_set()) out.push_back(w.vector());
        return out;
      })
      .def("point", [](const GridSpec& g, const GridIndex& k) { return g.point(k).vector(); }, py::arg("key"))
      .def("__len__", [](const GridSpec& g) { return g.semidominant_points().size(); })
      .def("__repr__", [](const GridSpec& g) {
        std::ostringstream out;
        out << "GridSpec(n=" << g.dimension() << ", N=" << g.density() << ")";
        return out.str();
      });

  m.def(
      "forward",
      [](const py::dict& samples, const GridSpec& grid) {
        return from_keyed(forward(to_keyed<SampleTag>(samples, grid.dimension(), grid.density()), grid));
      },
      py::arg("samples"), py::arg("grid"), "Maps {grid key: value} to {weight: coefficient}.");
  m.def(
      "inverse",
      [](const py::dict& coefficients, const GridSpec& grid) {
        return from_keyed(inverse(to_keyed<CoefficientTag>(coefficients, grid.dimension(), grid.density()), grid));
      },
      py::arg("coefficients"), py::arg("grid"), "Maps {weight: coefficient} to {grid key: value}.");
  m.def(
      "interpolate",
      [](const py::dict& coefficients, const GridSpec& grid, const std::vector<double>& x) {
        return interpolate(to_keyed<CoefficientTag>(coefficients, grid.dimension(), grid.density()), Point(x));
      },
      py::arg("coefficients"), py::arg("grid"), py::arg("x"));
  m.def(
      "sample",
      [](const GridSpec& grid, const std::function<Complex(const std::vector<double>&)>& f) {
        return from_keyed(sample(grid, [&](const Point& x) { return f(x.vector()); }));
      },
      py::arg("grid"), py::arg("f"));

  // Hermite functions
  m.def("hermite_polynomial", &hermite_polynomial, py::arg("m"), py::arg("t"));
  m.def("hermite_1d_transform", &hermite_1d_transform, py::arg("m"), py::arg("x"), py::arg("nodes") = 200,
        py::arg("half_width") = 6.0);
  m.def("stated_hermite_eigenvalue", &stated_hermite_eigenvalue, py::arg("degree"));

  // invariant suite
  m.def(
      "verify",
      [](std::vector<int> dimensions, int max_density, int resolution, std::uint64_t seed,
         std::optional<double> tolerance) {
        VerifyConfig config;
        config.dimensions = std::move(dimensions);
        config.max_density = max_density;
        config.resolution = resolution;
        config.seed = seed;
        config.tolerance = tolerance;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(config);
        }
        return report_to_dict(report);
      },
      py::arg("dimensions") = std::vector<int>{2, 3}, py::arg("max_density") = 5, py::arg("resolution") = 64,
      py::arg("seed") = 0, py::arg("tolerance") = py::none());
}
