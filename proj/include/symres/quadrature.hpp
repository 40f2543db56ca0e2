#pragma once

#include <functional>

#include "symres/types.hpp"

namespace symres {

struct QuadratureResult {
  CScalar value;
  double error_estimate;
};

using CIntegrand = std::function<CScalar(CScalar)>;

/// Adaptive Gauss-Kronrod (7,15) integration along the straight segment [a,b]
/// in the complex plane. The absolute-error budget `tol` is split between
/// bisected halves; exceeding `max_depth` levels raises NoConvergence (the
/// usual cause is a pole on or next to the segment). Non-finite integrand
/// values force refinement rather than silent acceptance.
QuadratureResult integrate_segment(const CIntegrand& fn, CScalar a, CScalar b,
                                   double tol, int max_depth = 30);

/// Integration along the polyline a_0 -> a_1 -> ... -> a_{n-1}.
QuadratureResult integrate_polyline(const CIntegrand& fn,
                                    const std::vector<CScalar>& vertices,
                                    double tol, int max_depth = 30);

/// (1/2*pi*i) * contour integral of fn over the positively oriented circle
/// |z - center| = radius, by trapezoid sums with node doubling (spectrally
/// accurate for integrands analytic in an annulus around the circle).
QuadratureResult circle_mean(const CIntegrand& fn, CScalar center,
                             double radius, double tol);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace symres
