#pragma once

#include <vector>

#include "symres/rootspace.hpp"
#include "symres/types.hpp"

namespace symres {

/// Evaluation context for the spherical normalization function c and the
/// derived density. The normalization c0 is fixed once at construction by
/// requiring c(-i rho) = 1; pole_guard is the refusal distance around genuine
/// poles of the per-root meromorphic factor.
struct CFunContext {
  SymmetricSpaceSpec space;
  SpaceInvariants inv;
  CScalar c0 = 1.0;
  double pole_guard = 1e-8;
  /// Precomputed alpha / <alpha, alpha> per root.
  std::vector<RealVec> alpha0;
  /// Precomputed |alpha| per root.
  std::vector<double> alpha_len;
};

CFunContext make_context(const SymmetricSpaceSpec& space,
                         double pole_guard = 1e-8);

/// Distance from z to the nearest genuine pole of h_alpha (infinity when the
/// factor is entire). Genuine poles survive the cancellation against the
/// zeros of 1/Gamma(z): for odd m they sit at z = -(m/2 + n), n >= 0; for
/// even m with odd m2 at z = -(m/2 + m2 + 2n); otherwise there are none.
double h_pole_distance(int m, int m2, CScalar z);

/// Meromorphic per-root factor
///   h(z) = Gamma((m/2 + 1 + z)/2) * Gamma((m/2 + m2 + z)/2) / Gamma(z),
/// evaluated by log-Gamma differences, with exact finite limits at the
/// integer sites where a numerator pole cancels against the 1/Gamma(z) zero.
/// Raises NearPole within pole_guard of a genuine pole. h(0) = 0.
CScalar h_alpha(int m, int m2, CScalar z, double pole_guard = 1e-8);

/// 1/c(lambda) = c0^{-1} * prod over roots of 2^{z} h(z), z = <i lambda,
/// alpha / <alpha, alpha>>. Entire in lambda when the density is entire.
CScalar c_inverse(const CFunContext& ctx, const ComplexVec& lambda);

/// Density p(lambda) = (1/c(lambda)) * (1/c(-lambda)); even in lambda, equal
/// to |1/c|^2 on the real subspace, and vanishing at 0.
CScalar plancherel_density(const CFunContext& ctx, const ComplexVec& lambda);

struct DensityPole {
  CScalar location;  ///< on the positive imaginary axis
  int order;         ///< confirmed numerically from circle growth
};

/// Rank-1 only: poles of xi -> p(xi * u) with height in (0, max_height],
/// sorted by height. Locations come from the Gamma-factor lattice; each order
/// is confirmed by the growth exponent of p on shrinking circles. Raises
/// RankUnsupported for rank >= 2.
std::vector<DensityPole> plancherel_poles(const CFunContext& ctx,
                                          double max_height);

/// Degree bound sum_roots (m + m2) for the polynomial growth of the density
/// on the real subspace (used for quadrature tail envelopes).
int density_degree_bound(const SymmetricSpaceSpec& space);

}  // namespace symres
