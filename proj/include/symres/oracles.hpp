#pragma once

#include <string>
#include <vector>

#include "symres/continuation.hpp"

namespace symres {

struct OracleReport {
  std::string name;
  std::vector<CScalar> grid;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double threshold = 0.0;
  bool passed = false;  ///< max_rel_err <= threshold
};

/// Closed form kappa * (sqrt(pi) - i*pi*w*faddeeva(-w)): the continuation of
/// (1/2) * full-line integral of 2*kappa*x^2*exp(-x^2)/(x^2 - w^2) across the
/// real axis, entire in w. This is the convention anchor for the engine's
/// correction-term signs.
CScalar h3_gaussian_resolvent(CScalar w, double kappa);

/// Engine vs closed form for the rank-1 entire space H3 with the unit
/// Gaussian profile, on the 5x5 grid {-2,-1,0,1,2}^2 minus the origin.
OracleReport faddeeva_convention_gate(double threshold = 1e-9);

/// Deformed-contour agreement for homotopic paths (realizes the
/// path-independence of the continuation kernel). Passed iff the relative
/// difference <= 1e-8.
OracleReport cross_contour_check(const RadialProfile& rp, CScalar w,
                                 const ContourPath& path_a,
                                 const ContourPath& path_b);

}  // namespace symres
