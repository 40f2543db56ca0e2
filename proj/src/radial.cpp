#include "symres/radial.hpp"

#include <algorithm>
#include <cmath>

#include "symres/errors.hpp"
#include "symres/quadrature.hpp"

namespace symres {

namespace {

// Uniform circle rule, spectrally accurate for smooth periodic integrands.
SphereRule circle_rule(int n) {
  SphereRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.assign(static_cast<std::size_t>(n), 2.0 * M_PI / n);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * M_PI * k / n;
    rule.nodes.push_back(RealVec{std::cos(theta), std::sin(theta)});
  }
  return rule;
}

// Gauss-Legendre in u = cos(theta) (exact for polynomial moments) times a
// uniform azimuthal grid.
SphereRule two_sphere_rule(int resolution) {
  RealVec u_nodes;
  RealVec u_weights;
  gauss_legendre(resolution, u_nodes, u_weights);
  const int q = 2 * resolution;
  SphereRule rule;
  for (int i = 0; i < resolution; ++i) {
    const double u = u_nodes[static_cast<std::size_t>(i)];
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int k = 0; k < q; ++k) {
      const double phi = 2.0 * M_PI * k / q;
      rule.nodes.push_back(RealVec{u, s * std::cos(phi), s * std::sin(phi)});
      rule.weights.push_back(u_weights[static_cast<std::size_t>(i)] * 2.0 *
                             M_PI / q);
    }
  }
  return rule;
}

// Product rule in hyperspherical angles with explicit sin-power weights.
SphereRule hypersphere_rule(int rank, int resolution) {
  RealVec x_nodes;
  RealVec x_weights;
  gauss_legendre(resolution, x_nodes, x_weights);
  const int n_angles = rank - 2;  // polar angles; the last angle is azimuthal
  const int q = 2 * resolution;

  SphereRule rule;
  std::vector<int> index(static_cast<std::size_t>(n_angles), 0);
  while (true) {
    // Assemble the polar part for this multi-index.
    double weight = 1.0;
    RealVec theta(static_cast<std::size_t>(n_angles));
    for (int k = 0; k < n_angles; ++k) {
      const double x = x_nodes[static_cast<std::size_t>(index[k])];
      const double th = 0.5 * M_PI * (x + 1.0);  // map [-1,1] -> [0,pi]
      theta[static_cast<std::size_t>(k)] = th;
      const int sin_power = rank - 2 - k;  // sin^{rank-1-(k+1)}
      weight *= x_weights[static_cast<std::size_t>(index[k])] * 0.5 * M_PI *
                std::pow(std::sin(th), sin_power);
    }
    for (int j = 0; j < q; ++j) {
      const double phi = 2.0 * M_PI * j / q;
      RealVec node(static_cast<std::size_t>(rank));
      double sin_prod = 1.0;
      for (int k = 0; k < n_angles; ++k) {
        node[static_cast<std::size_t>(k)] =
            sin_prod * std::cos(theta[static_cast<std::size_t>(k)]);
        sin_prod *= std::sin(theta[static_cast<std::size_t>(k)]);
      }
      node[static_cast<std::size_t>(rank - 2)] = sin_prod * std::cos(phi);
      node[static_cast<std::size_t>(rank - 1)] = sin_prod * std::sin(phi);
      rule.nodes.push_back(node);
      rule.weights.push_back(weight * 2.0 * M_PI / q);
    }
    // Odometer step.
    int k = n_angles - 1;
    while (k >= 0 && ++index[static_cast<std::size_t>(k)] == resolution) {
      index[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return rule;
}

}  // namespace

SphereRule sphere_rule(int rank, int resolution) {
  if (rank < 1) {
    raise(ErrorCode::InvalidSpec, "sphere rule needs rank >= 1");
  }
  if (rank == 1) {
    SphereRule rule;
    rule.nodes = {RealVec{1.0}, RealVec{-1.0}};
    rule.weights = {1.0, 1.0};
    return rule;
  }
  if (resolution < 4) {
    raise(ErrorCode::BadResolution,
          "sphere resolution must be >= 4 for rank >= 2");
  }
  if (rank == 2) return circle_rule(resolution);
  if (rank == 3) return two_sphere_rule(resolution);
  return hypersphere_rule(rank, resolution);
}

RadialProfile make_radial_profile(const SymmetricSpaceSpec& space,
                                  const SpectralProfile& profile,
                                  int resolution) {
  validate_profile(profile);
  if (profile.rank != space.rank) {
    raise(ErrorCode::InvalidSpec,
          "profile rank does not match the space rank");
  }
  if (resolution == 0) {
    if (space.rank == 2) {
      resolution = 256;
    } else if (space.rank == 3) {
      resolution = 32;
    } else {
      resolution = 24;
    }
  }
  RadialProfile rp;
  rp.ctx = make_context(space);
  rp.profile = profile;
  rp.rule = sphere_rule(space.rank, resolution);
  return rp;
}

namespace {

// Distance from xi to the two vertical cuts +-i[r, inf).
double cut_distance(CScalar xi, double r) {
  const double x = std::abs(xi.real());
  const double y = std::abs(xi.imag());
  if (y >= r) return x;
  return std::hypot(x, r - y);
}

}  // namespace

CScalar radial_F(const RadialProfile& rp, CScalar xi) {
  const int rank = rp.ctx.space.rank;
  if (rank >= 2 && !rp.ctx.inv.entire_density &&
      cut_distance(xi, rp.ctx.inv.branch_radius) < 1e-3) {
    raise(ErrorCode::OffDomain,
          "radius on (or too close to) a branch cut of the sphere average");
  }
  CScalar acc = 0.0;
  for (std::size_t j = 0; j < rp.rule.nodes.size(); ++j) {
    const ComplexVec lambda = scale(xi, rp.rule.nodes[j]);
    acc += rp.rule.weights[j] * profile_eval(rp.profile, lambda) *
           plancherel_density(rp.ctx, lambda);
  }
  CScalar radial_factor = 1.0;
  for (int k = 1; k < rank; ++k) radial_factor *= xi;
  return radial_factor * acc;
}

RadialEnvelope radial_envelope(const RadialProfile& rp) {
  RadialEnvelope env;
  env.min_width = min_width(rp.profile);
  env.degree = max_degree(rp.profile) + density_degree_bound(rp.ctx.space) +
               rp.ctx.space.rank - 1;
  double scale_bound = 1.0;
  for (double x : {1.0, 2.0, 4.0}) {
    const CScalar fx = radial_F(rp, CScalar(x, 0.0));
    const double ex = std::pow(1.0 + x, env.degree) *
                      std::exp(-env.min_width * x * x);
    scale_bound = std::max(scale_bound, std::abs(fx) / ex);
  }
  env.scale = scale_bound;
  return env;
}

double envelope_cutoff(const RadialEnvelope& env, double threshold) {
  // env(x) = scale * (1+x)^degree * exp(-w x^2) is decreasing past its peak;
  // fixed-point iteration on x = sqrt(log(scale (1+x)^deg / thr) / w).
  double x = 4.0;
  for (int it = 0; it < 64; ++it) {
    const double body =
        env.scale * std::pow(1.0 + x, env.degree) / threshold;
    if (body <= 1.0) break;
    const double next = std::sqrt(std::log(body) / env.min_width);
    if (next <= x) break;
    x = std::min(next, 60.0);
    if (x >= 60.0) break;
  }
  return std::min(std::max(x, 4.0), 60.0);
}

}  // namespace symres
