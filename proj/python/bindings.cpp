#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxpcl/analysis.hpp"
#include "maxpcl/catalog.hpp"
#include "maxpcl/errors.hpp"
#include "maxpcl/export.hpp"
#include "maxpcl/lorentz.hpp"
#include "maxpcl/metric.hpp"
#include "maxpcl/singularity.hpp"
#include "maxpcl/verify.hpp"

namespace py = pybind11;
using namespace maxpcl;

namespace {

using Triple = std::tuple<double, double, double>;
Triple out(const LVec3& p) { return {p.x1, p.x2, p.x0}; }
LVec3 in(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }

}  // namespace

PYBIND11_MODULE(_maxpcl, m) {
  m.doc() = "Maximal surfaces with planar curvature lines in R^{2,1}";

  // later registrations are tried first, so the base class goes first
  static py::exception<Error> base(m, "Error");
  py::register_exception<InvalidFamilyParameter>(m, "InvalidFamilyParameter", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<SingularPointError>(m, "SingularPointError", base.ptr());
  py::register_exception<IOError>(m, "IOError", base.ptr());

  m.def("minkowski_inner", [](const Triple& a, const Triple& b) { return minkowski_inner(in(a), in(b)); });
  m.def("lorentz_cross", [](const Triple& a, const Triple& b) { return out(lorentz_cross(in(a), in(b))); });

  py::class_<MetricFamily>(m, "MetricFamily")
      .def_static("case1", &MetricFamily::case1, py::arg("c"), py::arg("d"))
      .def_static("case2", &MetricFamily::case2, py::arg("phi"))
      .def("__repr__", &MetricFamily::describe);
  py::class_<MetricSample>(m, "MetricSample")
      .def_readonly("rho", &MetricSample::rho)
      .def_readonly("rho_u", &MetricSample::rho_u)
      .def_readonly("rho_v", &MetricSample::rho_v)
      .def_readonly("rho_uu", &MetricSample::rho_uu)
      .def_readonly("rho_vv", &MetricSample::rho_vv);
  m.def("eval_rho", &eval_rho, py::arg("metric"), py::arg("u"), py::arg("v"));
  m.def("gauss_residual", &gauss_residual);

  py::class_<SurfaceFamily>(m, "SurfaceFamily")
      .def_static("theta", &SurfaceFamily::theta)
      .def_static("lambda_", &SurfaceFamily::lambda)
      .def_static("lambda_arg", &SurfaceFamily::lambda_arg)
      .def_static("cat_light", &SurfaceFamily::cat_light)
      .def_static("plane_def", &SurfaceFamily::plane_def)
      .def_static("bonnet", &SurfaceFamily::bonnet)
      .def_readonly("param", &SurfaceFamily::param)
      .def_property_readonly("tag", &SurfaceFamily::tag)
      .def("__repr__", &SurfaceFamily::describe);
  m.def("default_catalog", &default_catalog);
  m.def("conjugate_data", &conjugate_data);
  m.def("modulus_h", &modulus_h);
  m.def("position", [](const SurfaceFamily& f, double u, double v) { return out(closed_form_position(f, u, v)); });
  m.def("first_fundamental_form", [](const SurfaceFamily& f, double u, double v) {
    const auto I = fundamental_form(closed_form_surface(f, u, v));
    return std::make_tuple(I.E, I.F, I.G);
  });
  m.def("unit_normal", [](const SurfaceFamily& f, double u, double v) { return out(unit_normal(closed_form_surface(f, u, v))); });
  m.def("mean_curvature", [](const SurfaceFamily& f, double u, double v, double step) { return mean_curvature_fd(f, u, v, step); },
        py::arg("family"), py::arg("u"), py::arg("v"), py::arg("step") = 1e-3);

  py::enum_<SingularityClass>(m, "SingularityClass")
      .value("cuspidal_edge", SingularityClass::CuspidalEdge)
      .value("swallowtail", SingularityClass::Swallowtail)
      .value("cuspidal_cross_cap", SingularityClass::CuspidalCrossCap)
      .value("cuspidal_s1_minus", SingularityClass::CuspidalS1Minus)
      .value("cuspidal_butterfly", SingularityClass::CuspidalButterfly)
      .value("degenerate", SingularityClass::Degenerate);
  py::class_<SingularPoint>(m, "SingularPoint")
      .def_readonly("u", &SingularPoint::u)
      .def_readonly("v", &SingularPoint::v)
      .def_readonly("cls", &SingularPoint::cls)
      .def("__repr__", [](const SingularPoint& p) {
        return "SingularPoint(" + std::to_string(p.u) + ", " + std::to_string(p.v) + ", " + to_string(p.cls) + ")";
      });
  m.def("special_points", [](const SurfaceFamily& f, int n) { return special_points(f, n); }, py::arg("family"),
        py::arg("n_samples") = 512);
  m.def("count_per_period", [](const SurfaceFamily& f, int n) {
    const SingularCounts c = count_per_period(f, n);
    return std::make_tuple(c.sw, c.ccr, c.cs);
  }, py::arg("family"), py::arg("n_samples") = 512);
  m.def("conjugate_counts", [](const SurfaceFamily& f) {
    const ConjugateCounts c = conjugate_counts(f);
    return std::make_tuple(c.ccr, c.sw, c.cb);
  });

  m.def("mesh", [](const SurfaceFamily& f, const std::string& grid) {
    const Mesh mesh = sample_mesh(f, GridSpec::parse(grid));
    std::vector<Triple> v;
    v.reserve(mesh.vertices.size());
    for (const auto& p : mesh.vertices) v.push_back(out(p));
    return std::make_pair(v, mesh.faces);
  }, py::arg("family"), py::arg("grid") = "-1:1:11,-1:1:11");
  m.def("verify_all_json", [](const std::string& grid) {
    VerifyOptions opt;
    opt.grid = GridSpec::parse(grid);
    return run_verify_all(opt).json();
  }, py::arg("grid") = "-1:1:11,-1:1:11");
}
