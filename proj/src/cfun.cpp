#include "symres/cfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symres/errors.hpp"
#include "symres/quadrature.hpp"
#include "symres/specialfns.hpp"

namespace symres {

namespace {

constexpr double kLog2 = 0.69314718055994530942;
// Window around integer sites where the direct log-Gamma difference loses to
// the exact cancellation limit.
constexpr double kLimitWindow = 4e-12;

bool nonpositive_integer(double v, long long* out) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || r > 0.0) return false;
  *out = static_cast<long long>(r);
  return true;
}

// Real Gamma with its sign, at any non-pole real argument (the argument may
// be a negative half-integer, where Gamma alternates sign).
double signed_gamma(double a) {
  return std::tgamma(a);
}

// n!/k! computed in log space to survive large n.
double factorial_ratio(long long n, long long k) {
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

double h_pole_distance(int m, int m2, CScalar z) {
  double start = 0.0;
  double step = 0.0;
  if (m % 2 != 0) {
    start = 0.5 * m;
    step = 1.0;
  } else if (m2 % 2 != 0) {
    start = 0.5 * m + m2;
    step = 2.0;
  } else {
    return std::numeric_limits<double>::infinity();
  }
  // Poles at z = -(start + k*step), k >= 0.
  double k = std::round((-z.real() - start) / step);
  if (k < 0.0) k = 0.0;
  const double site = -(start + k * step);
  return std::abs(z - CScalar(site, 0.0));
}

CScalar h_alpha(int m, int m2, CScalar z, double pole_guard) {
  if (h_pole_distance(m, m2, z) < pole_guard) {
    raise(ErrorCode::NearPole, "h_alpha within pole_guard of a genuine pole");
  }
  const double half_m = 0.5 * m;
  if (gamma_pole_distance(z) < kLimitWindow) {
    // z is (numerically) a nonpositive integer: 1/Gamma(z) vanishes there and
    // the value is the exact cancellation limit.
    double z0r = std::round(z.real());
    if (z0r > 0.0) z0r = 0.0;
    const long long n0 = static_cast<long long>(-z0r);
    const double a1 = 0.5 * (half_m + 1.0 + z0r);
    const double a2 = 0.5 * (half_m + m2 + z0r);
    long long k1 = 0;
    long long k2 = 0;
    const bool p1 = nonpositive_integer(a1, &k1);
    const bool p2 = nonpositive_integer(a2, &k2);
    if (p1 && p2) {
      // Both numerator factors singular: genuine pole; unreachable past the
      // guard above, kept as a defensive check.
      raise(ErrorCode::NearPole, "h_alpha at a genuine pole site");
    }
    if (!p1 && !p2) return CScalar(0.0, 0.0);
    const long long k = p1 ? -k1 : -k2;
    const double other = p1 ? a2 : a1;
    const double sign = ((k + n0) % 2 == 0) ? 1.0 : -1.0;
    const double value =
        2.0 * sign * factorial_ratio(n0, k) * signed_gamma(other);
    return CScalar(value, 0.0);
  }
  const CScalar a1 = 0.5 * (half_m + 1.0 + z);
  const CScalar a2 = 0.5 * (half_m + m2 + z);
  return std::exp(log_gamma(a1) + log_gamma(a2) - log_gamma(z));
}

CFunContext make_context(const SymmetricSpaceSpec& space, double pole_guard) {
  validate_spec(space);
  CFunContext ctx;
  ctx.space = space;
  ctx.inv = invariants(space);
  ctx.pole_guard = pole_guard;
  for (const RestrictedRoot& root : space.roots) {
    const double len_sq = norm_sq(root.vector);
    RealVec a0 = root.vector;
    for (double& x : a0) x /= len_sq;
    ctx.alpha0.push_back(a0);
    ctx.alpha_len.push_back(std::sqrt(len_sq));
  }
  // Normalization: evaluate the raw product at lambda = -i rho, where every
  // z is positive, and store it so that c_inverse(-i rho) = 1.
  ctx.c0 = 1.0;
  ComplexVec at_rho(ctx.inv.rho.size());
  for (std::size_t i = 0; i < ctx.inv.rho.size(); ++i) {
    at_rho[i] = CScalar(0.0, -ctx.inv.rho[i]);
  }
  ctx.c0 = c_inverse(ctx, at_rho);
  return ctx;
}

CScalar c_inverse(const CFunContext& ctx, const ComplexVec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(ctx.space.rank)) {
    raise(ErrorCode::InvalidSpec, "lambda dimension must equal the rank");
  }
  CScalar prod = 1.0;
  for (std::size_t i = 0; i < ctx.space.roots.size(); ++i) {
    const RestrictedRoot& root = ctx.space.roots[i];
    const CScalar z = CScalar(0.0, 1.0) * dot(lambda, ctx.alpha0[i]);
    const CScalar factor =
        std::exp(z * kLog2) * h_alpha(root.m, root.m2, z, ctx.pole_guard);
    prod *= factor;
  }
  return prod / ctx.c0;
}

CScalar plancherel_density(const CFunContext& ctx, const ComplexVec& lambda) {
  ComplexVec neg(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
  return c_inverse(ctx, lambda) * c_inverse(ctx, neg);
}

int density_degree_bound(const SymmetricSpaceSpec& space) {
  int degree = 0;
  for (const RestrictedRoot& root : space.roots) degree += root.m + root.m2;
  return degree;
}

std::vector<DensityPole> plancherel_poles(const CFunContext& ctx,
                                          double max_height) {
  if (ctx.space.rank != 1) {
    raise(ErrorCode::RankUnsupported,
          "density pole enumeration is available for rank-1 spaces only");
  }
  std::vector<double> heights;
  for (std::size_t i = 0; i < ctx.space.roots.size(); ++i) {
    const RestrictedRoot& root = ctx.space.roots[i];
    double start = 0.0;
    double step = 0.0;
    if (root.m % 2 != 0) {
      start = 0.5 * root.m;
      step = 1.0;
    } else if (root.m2 % 2 != 0) {
      start = 0.5 * root.m + root.m2;
      step = 2.0;
    } else {
      continue;  // this factor is entire
    }
    for (double s = start; s * ctx.alpha_len[i] <= max_height + 1e-12;
         s += step) {
      heights.push_back(s * ctx.alpha_len[i]);
    }
  }
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end(),
                            [](double a, double b) {
                              return std::abs(a - b) < 1e-9;
                            }),
                heights.end());

  // Rank-1 evaluation direction: the (unit) root direction.
  const double u0 =
      ctx.space.roots[0].vector[0] / std::abs(ctx.space.roots[0].vector[0]);
  auto density_at = [&](CScalar xi) {
    return plancherel_density(ctx, ComplexVec{xi * u0});
  };

  std::vector<DensityPole> poles;
  for (double t : heights) {
    const CScalar center(0.0, t);
    // Pole order from the growth exponent across two circle radii.
    double max2 = 0.0;
    double max3 = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double theta = 2.0 * M_PI * k / 64.0;
      const CScalar dir = std::polar(1.0, theta);
      max2 = std::max(max2, std::abs(density_at(center + 1e-2 * dir)));
      max3 = std::max(max3, std::abs(density_at(center + 1e-3 * dir)));
    }
    const double ratio = max3 / max2;
    if (!(ratio > 3.0)) continue;  // no actual growth: cancelled site
    const int order = static_cast<int>(std::lround(std::log10(ratio)));
    if (order < 1) continue;
    // Confirm with the leading Laurent coefficient on a small contour.
    const double scale = max2 * std::pow(1e-2, order);
    const QuadratureResult lead = circle_mean(
        [&](CScalar zeta) {
          return density_at(zeta) * std::pow(zeta - center, order - 1);
        },
        center, 1e-2, 1e-10 * (1.0 + scale));
    if (std::abs(lead.value) < 1e-4 * scale) continue;
    poles.push_back(DensityPole{center, order});
  }
  return poles;
}

}  // namespace symres
