// Python bindings for the symres core library.
//
// The module mirrors the C++ API one-to-one: plain structs become small
// classes with readable attributes, EngineError becomes a Python exception
// whose message starts with the error-code name, and every numerical entry
// point (densities, radial profiles, resolvent evaluation, residues,
// oracles) is exposed as a free function.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symres/cfun.hpp"
#include "symres/continuation.hpp"
#include "symres/errors.hpp"
#include "symres/oracles.hpp"
#include "symres/profile.hpp"
#include "symres/radial.hpp"
#include "symres/rootspace.hpp"
#include "symres/spaceio.hpp"
#include "symres/specialfns.hpp"

namespace py = pybind11;
using namespace symres;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Spherical-normalization densities and resolvent continuation for "
      "symmetric-space root data";
  m.attr("__version__") = "0.1.0";

  py::register_exception<EngineError>(m, "EngineError");

  py::enum_<ErrorCode>(m, "ErrorCode")
      .value("UnknownSpace", ErrorCode::UnknownSpace)
      .value("InvalidSpec", ErrorCode::InvalidSpec)
      .value("ClosureOverflow", ErrorCode::ClosureOverflow)
      .value("AtPole", ErrorCode::AtPole)
      .value("NearPole", ErrorCode::NearPole)
      .value("OffDomain", ErrorCode::OffDomain)
      .value("OffSurface", ErrorCode::OffSurface)
      .value("OnSpectrum", ErrorCode::OnSpectrum)
      .value("NoConvergence", ErrorCode::NoConvergence)
      .value("RankUnsupported", ErrorCode::RankUnsupported)
      .value("BadResolution", ErrorCode::BadResolution)
      .value("EmptyPoleList", ErrorCode::EmptyPoleList);

  py::enum_<Parity>(m, "Parity")
      .value("Odd", Parity::Odd)
      .value("Even", Parity::Even);

  py::enum_<EvalMode>(m, "EvalMode")
      .value("General", EvalMode::General)
      .value("Rank1Meromorphic", EvalMode::Rank1Meromorphic);

  py::class_<RestrictedRoot>(m, "RestrictedRoot")
      .def(py::init<>())
      .def(py::init([](RealVec vector, int m_, int m2_) {
             RestrictedRoot r;
             r.vector = std::move(vector);
             r.m = m_;
             r.m2 = m2_;
             return r;
           }),
           py::arg("vector"), py::arg("m") = 1, py::arg("m2") = 0)
      .def_readwrite("vector", &RestrictedRoot::vector)
      .def_readwrite("m", &RestrictedRoot::m)
      .def_readwrite("m2", &RestrictedRoot::m2);

  py::class_<SymmetricSpaceSpec>(m, "SymmetricSpaceSpec")
      .def(py::init<>())
      .def_readwrite("name", &SymmetricSpaceSpec::name)
      .def_readwrite("rank", &SymmetricSpaceSpec::rank)
      .def_readwrite("roots", &SymmetricSpaceSpec::roots)
      .def_readwrite("factor_partition", &SymmetricSpaceSpec::factor_partition)
      .def("__repr__", [](const SymmetricSpaceSpec& s) {
        return "<SymmetricSpaceSpec '" + s.name +
               "' rank=" + std::to_string(s.rank) + ">";
      });

  py::class_<SpaceInvariants>(m, "SpaceInvariants")
      .def_readonly("rho", &SpaceInvariants::rho)
      .def_readonly("rho_norm_sq", &SpaceInvariants::rho_norm_sq)
      .def_readonly("branch_radius", &SpaceInvariants::branch_radius)
      .def_readonly("parity", &SpaceInvariants::parity)
      .def_readonly("entire_density", &SpaceInvariants::entire_density);

  py::class_<WeylGroup>(m, "WeylGroup")
      .def_readonly("rank", &WeylGroup::rank)
      .def_readonly("elements", &WeylGroup::elements)
      .def("__len__",
           [](const WeylGroup& w) { return w.elements.size(); });

  py::class_<SpectralProfile>(m, "SpectralProfile")
      .def_readonly("rank", &SpectralProfile::rank)
      .def_readonly("symmetrized", &SpectralProfile::symmetrized)
      .def("__repr__", [](const SpectralProfile& p) {
        return "<SpectralProfile rank=" + std::to_string(p.rank) + " terms=" +
               std::to_string(p.terms.size()) + ">";
      });

  py::class_<CFunContext>(m, "CFunContext")
      .def_readonly("space", &CFunContext::space)
      .def_readonly("inv", &CFunContext::inv)
      .def_readonly("pole_guard", &CFunContext::pole_guard);

  py::class_<DensityPole>(m, "DensityPole")
      .def_readonly("location", &DensityPole::location)
      .def_readonly("order", &DensityPole::order)
      .def("__repr__", [](const DensityPole& p) {
        return "<DensityPole at " + std::to_string(p.location.real()) + "+" +
               std::to_string(p.location.imag()) +
               "j order=" + std::to_string(p.order) + ">";
      });

  py::class_<RadialProfile>(m, "RadialProfile")
      .def_readonly("ctx", &RadialProfile::ctx)
      .def_readonly("profile", &RadialProfile::profile);

  py::class_<SurfacePoint>(m, "SurfacePoint")
      .def_readonly("w", &SurfacePoint::w)
      .def_readonly("kind", &SurfacePoint::kind);

  py::class_<Evaluation>(m, "Evaluation")
      .def_readonly("value", &Evaluation::value)
      .def_readonly("error_estimate", &Evaluation::error_estimate)
      .def("__repr__", [](const Evaluation& e) {
        return "<Evaluation value=(" + std::to_string(e.value.real()) + "," +
               std::to_string(e.value.imag()) +
               ") err=" + std::to_string(e.error_estimate) + ">";
      });

  py::class_<ContourPath>(m, "ContourPath")
      .def(py::init([](ComplexVec vertices, double tail_decay) {
             ContourPath p;
             p.vertices = std::move(vertices);
             p.tail_decay = tail_decay;
             return p;
           }),
           py::arg("vertices"), py::arg("tail_decay") = 0.0)
      .def_readwrite("vertices", &ContourPath::vertices)
      .def_readwrite("tail_decay", &ContourPath::tail_decay);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("name", &OracleReport::name)
      .def_readonly("grid", &OracleReport::grid)
      .def_readonly("max_abs_err", &OracleReport::max_abs_err)
      .def_readonly("max_rel_err", &OracleReport::max_rel_err)
      .def_readonly("threshold", &OracleReport::threshold)
      .def_readonly("passed", &OracleReport::passed)
      .def("__repr__", [](const OracleReport& r) {
        return "<OracleReport '" + r.name + "' " +
               (r.passed ? "passed" : "FAILED") + ">";
      });

  // Catalog and root data.
  m.def("catalog_names", &catalog_names);
  m.def("catalog_get", &catalog_get, py::arg("name"));
  m.def("validate_spec", &validate_spec, py::arg("space"));
  m.def("invariants", &invariants, py::arg("space"));
  m.def("rho", &rho, py::arg("space"));
  m.def("branch_radius", &branch_radius, py::arg("space"));
  m.def("j_factor", &j_factor, py::arg("m"));
  m.def("weyl_generate", &weyl_generate, py::arg("space"),
        py::arg("closure_bound") = std::size_t{10080});

  // Serialization.
  m.def("parse_space_text", &parse_space_text, py::arg("text"));
  m.def("load_space_file", &load_space_file, py::arg("path"));
  m.def("space_to_text", &space_to_text, py::arg("space"));
  m.def("parse_profile_text", &parse_profile_text, py::arg("text"),
        py::arg("rank"));
  m.def("load_or_parse_profile", &load_or_parse_profile,
        py::arg("path_or_json"), py::arg("rank"));
  m.def("profile_to_text", &profile_to_text, py::arg("profile"));

  // Profiles.
  m.def("gaussian_profile", &gaussian_profile, py::arg("rank"),
        py::arg("width") = 1.0);
  m.def("validate_profile", &validate_profile, py::arg("profile"));
  m.def("profile_eval", &profile_eval, py::arg("profile"), py::arg("lam"));
  m.def("symmetrize", &symmetrize, py::arg("profile"), py::arg("group"));
  m.def("min_width", &min_width, py::arg("profile"));

  // Normalization function and density.
  m.def("make_context", &make_context, py::arg("space"),
        py::arg("pole_guard") = 1e-8);
  m.def("c_inverse", &c_inverse, py::arg("ctx"), py::arg("lam"));
  m.def("plancherel_density", &plancherel_density, py::arg("ctx"),
        py::arg("lam"));
  m.def("plancherel_poles", &plancherel_poles, py::arg("ctx"),
        py::arg("max_height"));
  m.def("density_degree_bound", &density_degree_bound, py::arg("space"));

  // Radial profile.
  m.def("make_radial_profile", &make_radial_profile, py::arg("space"),
        py::arg("profile"), py::arg("resolution") = 0);
  m.def("radial_F", &radial_F, py::arg("radial_profile"), py::arg("xi"));

  // Continuation surface and resolvent.
  m.def("surface_point", &surface_point, py::arg("radial_profile"),
        py::arg("w"));
  m.def("surface_to_z", &surface_to_z, py::arg("radial_profile"),
        py::arg("point"));
  m.def(
      "reduce_to_strip",
      [](CScalar w) {
        auto [w0, n] = reduce_to_strip(w);
        return py::make_tuple(w0, n);
      },
      py::arg("w"));
  m.def("excluded_line_distance", &excluded_line_distance,
        py::arg("radial_profile"), py::arg("w"));
  m.def(
      "surface_point_valid",
      [](const RadialProfile& rp, const SurfacePoint& pt, EvalMode mode) {
        std::string reason;
        bool ok = surface_point_valid(rp, pt, mode, &reason);
        return py::make_tuple(ok, reason);
      },
      py::arg("radial_profile"), py::arg("point"),
      py::arg("mode") = EvalMode::General);
  m.def("resolvent_physical", &resolvent_physical, py::arg("radial_profile"),
        py::arg("z"), py::arg("tol") = 1e-10);
  m.def("resolvent_eval", &resolvent_eval, py::arg("radial_profile"),
        py::arg("point"), py::arg("mode") = EvalMode::General,
        py::arg("tol") = 1e-10);
  m.def("contour_resolvent", &contour_resolvent, py::arg("radial_profile"),
        py::arg("w"), py::arg("path"), py::arg("tol") = 1e-10);
  m.def("residue_at_pole", &residue_at_pole, py::arg("radial_profile"),
        py::arg("pole"), py::arg("tol") = 1e-12);

  // Oracles.
  m.def("h3_gaussian_resolvent", &h3_gaussian_resolvent, py::arg("w"),
        py::arg("kappa"));
  m.def("faddeeva_convention_gate", &faddeeva_convention_gate,
        py::arg("threshold") = 1e-9);
  m.def("cross_contour_check", &cross_contour_check, py::arg("radial_profile"),
        py::arg("w"), py::arg("path_a"), py::arg("path_b"));

  // Special functions (useful for cross-checking from Python).
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("faddeeva", &faddeeva, py::arg("z"));
}
