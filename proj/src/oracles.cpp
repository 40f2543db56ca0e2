#include "symres/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "symres/radial.hpp"
#include "symres/specialfns.hpp"

namespace symres {

namespace {

constexpr CScalar kI(0.0, 1.0);

double rel_err(CScalar got, CScalar want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace

CScalar h3_gaussian_resolvent(CScalar w, double kappa) {
  const double root_pi = std::sqrt(M_PI);
  return kappa * (root_pi - kI * M_PI * w * faddeeva(-w));
}

OracleReport faddeeva_convention_gate(double threshold) {
  OracleReport report;
  report.name = "faddeeva-convention-gate";
  report.threshold = threshold;

  const RadialProfile rp =
      make_radial_profile(catalog_get("H3"), gaussian_profile(1));
  const double coords[5] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  for (double im : coords) {
    for (double re : coords) {
      const CScalar w(re, im);
      report.grid.push_back(w);
      const Evaluation got =
          resolvent_eval(rp, surface_point(rp, w), EvalMode::General, 1e-11);
      const CScalar want = h3_gaussian_resolvent(w, 1.0);
      report.max_abs_err =
          std::max(report.max_abs_err, std::abs(got.value - want));
      report.max_rel_err = std::max(report.max_rel_err, rel_err(got.value, want));
    }
  }
  report.passed = report.max_rel_err <= report.threshold;
  return report;
}

OracleReport cross_contour_check(const RadialProfile& rp, CScalar w,
                                 const ContourPath& path_a,
                                 const ContourPath& path_b) {
  OracleReport report;
  report.name = "cross-contour-check";
  report.threshold = 1e-8;
  report.grid = {w};
  const Evaluation a = contour_resolvent(rp, w, path_a, 1e-10);
  const Evaluation b = contour_resolvent(rp, w, path_b, 1e-10);
  report.max_abs_err = std::abs(a.value - b.value);
  const double scale = std::max({std::abs(a.value), std::abs(b.value), 1e-300});
  report.max_rel_err = report.max_abs_err / scale;
  report.passed = report.max_rel_err <= report.threshold;
  return report;
}

}  // namespace symres
