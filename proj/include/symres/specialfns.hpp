#pragma once

#include "symres/types.hpp"

namespace symres {

/// Principal-branch log Gamma on the cut plane, Lanczos (g = 7, 9
/// coefficients) with reflection for Re z < 1/2. Relative accuracy ~1e-14 for
/// |z| <= 50 away from poles. Raises AtPole when z is within 1e-12 of a
/// nonpositive integer. The imaginary part is the principal determination;
/// callers that exponentiate ratios are insensitive to 2*pi*i offsets.
CScalar log_gamma(CScalar z);

/// Distance from z to the nearest nonpositive integer (the Gamma pole set).
double gamma_pole_distance(CScalar z);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz), entire. Region-split
/// evaluation: Maclaurin series on |z| <= 2, corrected trapezoid sampling on
/// 2 < |z| <= 10.5, Laplace continued fraction beyond; the lower half-plane
/// uses w(z) = 2 exp(-z^2) - w(-z). Relative accuracy ~5e-14 on |z| <= 10.5.
CScalar faddeeva(CScalar z);

/// sin(pi z) with argument reduction (full relative accuracy near zeros).
CScalar sin_pi(CScalar z);

/// log(sin(pi z)), overflow-safe for large |Im z|.
CScalar log_sin_pi(CScalar z);

}  // namespace symres
