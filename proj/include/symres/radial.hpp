#pragma once

#include "symres/cfun.hpp"
#include "symres/profile.hpp"

namespace symres {

/// Quadrature rule on the unit sphere of the rank-dimensional space. Rank 1
/// is the exact two-point rule {+u, -u} with counting-measure weights {1, 1};
/// rank 2 is the N-point uniform circle rule; rank >= 3 are product
/// Gauss-Legendre x uniform rules with positive weights summing to the sphere
/// measure.
struct SphereRule {
  std::vector<RealVec> nodes;
  RealVec weights;
};

/// Raises BadResolution when resolution < 4 for rank >= 2.
SphereRule sphere_rule(int rank, int resolution);

/// The radial function
///   F(xi) = xi^{rank-1} * sum_j weight_j V(xi w_j) p(xi w_j)
/// evaluable at complex radii off the cuts +-i[branch_radius, inf) (inside
/// them for entire densities; meromorphically through them for rank 1).
struct RadialProfile {
  CFunContext ctx;
  SpectralProfile profile;
  SphereRule rule;
};

/// resolution 0 picks a default per rank (256 for rank 2, 32 for rank 3,
/// 24 beyond).
RadialProfile make_radial_profile(const SymmetricSpaceSpec& space,
                                  const SpectralProfile& profile,
                                  int resolution = 0);

/// Raises OffDomain when xi lies on a cut of a rank >= 2 non-entire space;
/// NearPole propagates from the density in rank 1.
CScalar radial_F(const RadialProfile& rp, CScalar xi);

/// Envelope data used by the continuation module to truncate Gaussian tails.
struct RadialEnvelope {
  double min_width;    ///< slowest Gaussian width
  int degree;          ///< polynomial growth bound of |F|
  double scale;        ///< magnitude prefactor
};
RadialEnvelope radial_envelope(const RadialProfile& rp);

/// Smallest x >= 4 with envelope(x) <= threshold (capped at 60).
double envelope_cutoff(const RadialEnvelope& env, double threshold);

}  // namespace symres
