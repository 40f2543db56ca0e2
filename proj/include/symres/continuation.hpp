#pragma once

#include <string>
#include <utility>

#include "symres/quadrature.hpp"
#include "symres/radial.hpp"

namespace symres {

/// Point on the continuation surface in the uniformizing coordinate w:
/// spectral parameter z = |rho|^2 + w^2 (odd rank) or z = |rho|^2 + e^{2w}
/// (even rank). Physical sheet: Im w < 0 (odd) / Im w in (-pi, 0) (even).
struct SurfacePoint {
  CScalar w;
  Parity kind;
};

/// Surface point with the kind taken from the space parity.
SurfacePoint surface_point(const RadialProfile& rp, CScalar w);

/// Full spectral parameter |rho|^2 + w^2 or |rho|^2 + e^{2w}.
CScalar surface_to_z(const RadialProfile& rp, const SurfacePoint& pt);

/// Piecewise-linear complex path for deformed-contour quadrature.
struct ContourPath {
  std::vector<CScalar> vertices;
  double tail_decay = 0.0;  ///< half-width of the Gaussian tail truncation
};

/// Adaptive Gauss-Kronrod along the path; absolute error <= tol or
/// NoConvergence after 30 refinement levels.
QuadratureResult contour_integrate(const CIntegrand& fn,
                                   const ContourPath& path, double tol);

struct Evaluation {
  CScalar value;
  double error_estimate;
};

enum class EvalMode { General, Rank1Meromorphic };

/// Strip reduction for even kind: w = w0 + i*pi*n with Im w0 in (-pi, 0].
std::pair<CScalar, int> reduce_to_strip(CScalar w);

/// Distance from w to the excluded half-lines i*pi*(n + 1/2) + [log r, inf),
/// n != -1, of a non-entire even-kind surface (+infinity when none apply).
double excluded_line_distance(const RadialProfile& rp, CScalar w);

/// Domain predicate for resolvent_eval; optionally reports the reason.
bool surface_point_valid(const RadialProfile& rp, const SurfacePoint& pt,
                         EvalMode mode = EvalMode::General,
                         std::string* reason = nullptr);

/// Physical-sheet matrix element: direct half-line quadrature of
/// F(x)/(x^2 - z) for z off [0, inf) (z is the spectral parameter shifted by
/// -|rho|^2). Raises OnSpectrum within 1e-10 of the half-line. Near-spectrum
/// arguments use a Gaussian-subtraction split so the pole is handled in
/// closed form.
Evaluation resolvent_physical(const RadialProfile& rp, CScalar z,
                              double tol = 1e-10);

/// Resolvent on the continuation surface.
///
/// Odd kind (value is (1/2) G_c(w), G(w) = full-line integral of
/// F(x)/(x^2 - w^2)):
///   Im w < 0:  G_c = G;
///   Im w > 0:  G_c = G - 2*pi*i F(w)/w;
///   Im w = 0, w != 0:  G_c = PV G - i*pi F(w)/w;
///   w = 0: removable, (1/2) of the full-line integral of F(x)/x^2.
/// Even kind: reduce w = w0 + i*pi*n and return the half-line integral of
/// F(x)/(x^2 - e^{2 w0}) plus n*pi*i F(e^{w0}) e^{-w0}; the strip boundary
/// Im w0 = 0 is the principal value minus i*pi F(zeta)/(2 zeta), zeta =
/// e^{w0}, which is the limit from the physical strip.
///
/// Rank1Meromorphic extends the odd-kind domain through the cut, refusing
/// only pole_guard neighborhoods of the enumerated density poles.
Evaluation resolvent_eval(const RadialProfile& rp, const SurfacePoint& pt,
                          EvalMode mode = EvalMode::General,
                          double tol = 1e-10);

/// Continuation kernel along a caller-supplied path: (1/2) * integral of
/// F(x)/(x^2 - w^2) (odd kind) or integral of F(e^x) e^x/(e^{2x} - e^{2 w0})
/// (even kind, w reduced; the winding term is not added). Used by the
/// path-independence oracles.
Evaluation contour_resolvent(const RadialProfile& rp, CScalar w,
                             const ContourPath& path, double tol = 1e-10);

/// (1/2*pi*i) * contour integral of F around an enumerated rank-1 density
/// pole, over a circle of radius min(1e-2, 0.45 * distance to the nearest
/// other pole). Raises EmptyPoleList when the space has no poles and
/// NearPole when the separation collapses.
CScalar residue_at_pole(const RadialProfile& rp, CScalar pole,
                        double tol = 1e-12);

}  // namespace symres
