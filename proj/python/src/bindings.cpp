#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cumulant/cli.hpp"
#include "cumulant/cumulant_bijection.hpp"
#include "cumulant/errors.hpp"
#include "cumulant/io.hpp"
#include "cumulant/probability.hpp"

namespace py = pybind11;
using namespace cumulant;

// Documents cross the boundary as JSON text; the Python layer turns
// coefficients into Fractions.

namespace {

Algebra algebra_from_json(const std::string& text) { return io::parse_algebra(io::parse_json(text)); }

std::vector<std::string> generator_names(const Algebra& a) {
  std::vector<std::string> out;
  for (const auto& g : a.space()->generators()) out.push_back(g.name);
  return out;
}

std::vector<int> generator_degrees(const Algebra& a) {
  std::vector<int> out;
  for (const auto& g : a.space()->generators()) out.push_back(g.degree);
  return out;
}

std::string apply(const CumulantContext& ctx, const std::string& element, bool inverse) {
  const SElement v = io::parse_element(io::parse_json(element), *ctx.space());
  ctx.coalgebra().check_element(v);
  return io::to_json(inverse ? ctx.apply_inverse(v) : ctx.apply(v), *ctx.space()).dump();
}

std::vector<Scalar> parse_moments(const std::vector<std::string>& moments) {
  std::vector<Scalar> out;
  for (const auto& m : moments) out.push_back(parse_scalar(m));
  return out;
}

std::vector<std::string> format(const std::vector<Scalar>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(format_scalar(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cumulant bijection engine";

  static py::exception<Error> base(m, "CumulantError");
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<MismatchError>(m, "MismatchError", base.ptr());

  py::class_<Algebra>(m, "Algebra")
      .def_static("from_json", &algebra_from_json, py::arg("text"))
      .def_property_readonly("label", [](const Algebra& a) { return a.space()->label(); })
      .def_property_readonly("generators", &generator_names)
      .def_property_readonly("degrees", &generator_degrees)
      .def_property_readonly("dimension", &Algebra::dimension)
      .def("to_json", [](const Algebra& a) { return io::algebra_to_json(a).dump(); });

  py::class_<CumulantContext>(m, "CumulantContext")
      .def(py::init<Algebra, int>(), py::arg("algebra"), py::arg("cap"))
      .def_property_readonly("cap", &CumulantContext::cap)
      .def("tau_tilde", [](const CumulantContext& c, const std::string& v) { return apply(c, v, false); })
      .def("inverse", [](const CumulantContext& c, const std::string& v) { return apply(c, v, true); })
      .def("table", [](const CumulantContext& c, bool inverse) {
        return io::table_to_json(inverse ? c.inverse() : c.forward()).dump();
      });

  m.def(
      "homomorphism_defects",
      [](const std::string& map, const Algebra& source, const Algebra& target, int cap) {
        const LinearMap f = io::parse_linear_map(io::parse_json(map), source.space(), target.space());
        const CumulantContext a(source, cap), b(target, cap);
        return io::to_json(homomorphism_defects(f, a, b)).dump();
      },
      py::arg("map"), py::arg("source"), py::arg("target"), py::arg("cap"));

  m.def(
      "derivation_defects",
      [](const std::string& map, const Algebra& algebra, int cap) {
        const LinearMap d = io::parse_linear_map(io::parse_json(map), algebra.space(), algebra.space());
        const CumulantContext ctx(algebra, cap);
        return io::to_json(derivation_defects(d, ctx)).dump();
      },
      py::arg("map"), py::arg("algebra"), py::arg("cap"));

  m.def(
      "cumulants",
      [](const std::vector<std::string>& moments, int n) { return format(cumulants_from_moments(parse_moments(moments), n)); },
      py::arg("moments"), py::arg("n"));
  m.def(
      "oracle_cumulants",
      [](const std::vector<std::string>& moments, int n) { return format(oracle_cumulants(parse_moments(moments), n)); },
      py::arg("moments"), py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
