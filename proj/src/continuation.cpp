#include "symres/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "symres/errors.hpp"
#include "symres/specialfns.hpp"

namespace symres {

namespace {

constexpr CScalar kI(0.0, 1.0);
constexpr double kCutRefusal = 1e-3;       // honest-domain margin at the cuts
constexpr double kLineRefusal = 1e-3;      // margin at excluded half-lines
constexpr double kSpectrumEps = 1e-10;     // OnSpectrum threshold
constexpr double kZeroRadius = 1e-10;      // removable-point treatment of w=0
constexpr double kNearAxisBand = 0.6;      // subtraction band around the axis
constexpr double kBumpBand = 0.55;         // kernel-pole distance forcing a bump
constexpr double kBumpHeight = 0.6;        // triangular detour height
constexpr double kExpGuard = 600.0;        // max exponent in subtraction scaling
constexpr double kUpsampleDist = 0.25;     // refine the sphere rule inside this

double dist_to_upper_cut(CScalar w, double r) {
  if (w.imag() >= r) return std::abs(w.real());
  return std::hypot(w.real(), r - w.imag());
}

double dist_to_both_cuts(CScalar w, double r) {
  const double y = std::abs(w.imag());
  if (y >= r) return std::abs(w.real());
  return std::hypot(w.real(), r - y);
}

double dist_to_spectrum(CScalar z) {
  if (z.real() >= 0.0) return std::abs(z.imag());
  return std::abs(z);
}

double envelope_value(const RadialEnvelope& env, double x) {
  return env.scale * std::pow(1.0 + x, env.degree) *
         std::exp(-env.min_width * x * x);
}

// F with a temporarily refined sphere rule when the argument sits close to a
// cut (the fixed-resolution rule loses accuracy there).
CScalar radial_F_accurate(const RadialProfile& rp, CScalar xi) {
  const SpaceInvariants& inv = rp.ctx.inv;
  const int rank = rp.ctx.space.rank;
  if (rank >= 2 && !inv.entire_density &&
      dist_to_both_cuts(xi, inv.branch_radius) < kUpsampleDist) {
    RadialProfile dense;
    dense.ctx = rp.ctx;
    dense.profile = rp.profile;
    dense.rule = sphere_rule(rank, rank == 2 ? 2048 : (rank == 3 ? 96 : 48));
    return radial_F(dense, xi);
  }
  return radial_F(rp, xi);
}

// L(w) = integral over the whole real line of e^{-s x^2}/(x^2 - w^2) dx,
// sided consistently with the naive real-axis integral.
CScalar full_line_gaussian_kernel(double s, CScalar w) {
  const double rs = std::sqrt(s);
  if (w.imag() > 0.0) return kI * M_PI * faddeeva(rs * w) / w;
  if (w.imag() < 0.0) return -kI * M_PI * faddeeva(-rs * w) / w;
  // Principal value for real w != 0.
  return kI * M_PI / (2.0 * w) * (faddeeva(rs * w) - faddeeva(-rs * w));
}

// Integral over [0, inf) of e^{-s x^2}/(x^2 - z) dx for z off the spectrum.
CScalar half_line_gaussian_kernel(double s, CScalar z) {
  const CScalar zeta = s * z;
  const CScalar root = std::sqrt(zeta);
  CScalar c1;
  if (root.imag() >= 0.0) {
    c1 = 0.5 * kI * M_PI * faddeeva(root) / root;
  } else {
    c1 = -0.5 * kI * M_PI * faddeeva(-root) / root;
  }
  return std::sqrt(s) * c1;
}

// Subtraction band half-width: stay clear of the lower cut so that F(w)
// remains evaluable with good sphere-rule accuracy.
double subtraction_band(const RadialProfile& rp) {
  const SpaceInvariants& inv = rp.ctx.inv;
  if (rp.ctx.space.rank == 1 || inv.entire_density) return kNearAxisBand;
  return std::min(kNearAxisBand, 0.8 * inv.branch_radius);
}

struct NaiveLine {
  CScalar value;
  double error;
};

// Real-axis integral of F(x)/(x^2 - w^2) over the whole line (principal value
// on the axis), via Gaussian subtraction when the poles sit near the path.
NaiveLine odd_naive_line(const RadialProfile& rp, CScalar w,
                         const RadialEnvelope& env, double tol) {
  const double sbar = env.min_width;
  const double t_env = envelope_cutoff(env, tol / 10.0);
  const double pole_x = std::abs(w.real());
  const double quad_tol = 0.8 * tol;

  const bool pole_outside = pole_x > t_env + 2.0 &&
                            envelope_value(env, pole_x - 2.0) < tol * 1e-3;
  auto plain_integrand = [&](CScalar x) {
    return radial_F(rp, x) / (x * x - w * w);
  };
  if (pole_outside) {
    const QuadratureResult q = integrate_polyline(
        plain_integrand, {CScalar(-t_env), CScalar(0.0), CScalar(t_env)},
        quad_tol);
    return {q.value, q.error_estimate};
  }

  const double pad = std::max(4.0, 4.0 / std::sqrt(sbar));
  const double t = std::max(t_env, pole_x + pad);
  const bool can_subtract = std::abs(w.imag()) < subtraction_band(rp) &&
                            std::abs(sbar * (w * w).real()) <= kExpGuard;
  if (can_subtract) {
    const CScalar fw = radial_F_accurate(rp, w);
    const CScalar k = fw * std::exp(sbar * w * w);
    auto smooth_integrand = [&](CScalar x) {
      return (radial_F(rp, x) - k * std::exp(-sbar * x * x)) /
             (x * x - w * w);
    };
    const CScalar closed = k * full_line_gaussian_kernel(sbar, w);
    const double closed_err = 5e-14 * std::abs(closed);
    const QuadratureResult q = integrate_polyline(
        smooth_integrand, {CScalar(-t), CScalar(0.0), CScalar(t)},
        std::max(0.1 * tol, quad_tol - closed_err));
    return {q.value + closed, q.error_estimate + closed_err};
  }
  if (w.imag() != 0.0) {
    const QuadratureResult q = integrate_polyline(
        plain_integrand, {CScalar(-t), CScalar(0.0), CScalar(t)}, quad_tol);
    return {q.value, q.error_estimate};
  }
  // Real w with an overflow-blocked subtraction and a pole inside the
  // envelope support cannot occur (the envelope dies long before the guard).
  raise(ErrorCode::NoConvergence,
        "resolvent argument beyond the numeric range of the subtraction");
}

Evaluation odd_eval(const RadialProfile& rp, CScalar w,
                    const RadialEnvelope& env, double tol) {
  if (std::abs(w) < kZeroRadius) {
    // Removable point: F vanishes to second order at the origin.
    const double t_env = envelope_cutoff(env, tol / 10.0);
    auto integrand = [&](CScalar x) { return radial_F(rp, x) / (x * x); };
    const QuadratureResult q = integrate_polyline(
        integrand, {CScalar(-t_env), CScalar(0.0), CScalar(t_env)},
        0.8 * tol);
    return {0.5 * q.value, q.error_estimate};
  }
  // Residue / boundary corrections are known up front; budget the line
  // integral with whatever tolerance they leave over.
  CScalar corr = 0.0;
  double corr_err = 0.0;
  if (w.imag() > 0.0) {
    corr = 2.0 * M_PI * kI * radial_F_accurate(rp, w) / w;
    corr_err = 5e-14 * std::abs(corr);
  } else if (w.imag() == 0.0) {
    corr = M_PI * kI * radial_F_accurate(rp, w) / w;
    corr_err = 5e-14 * std::abs(corr);
  }
  const NaiveLine base =
      odd_naive_line(rp, w, env, std::max(0.1 * tol, tol - corr_err));
  return {0.5 * (base.value - corr), 0.5 * (base.error + corr_err)};
}

Evaluation even_eval(const RadialProfile& rp, CScalar w,
                     const RadialEnvelope& env, double tol) {
  const auto [w0, n] = reduce_to_strip(w);
  const CScalar zeta2 = std::exp(2.0 * w0);
  auto kernel = [&](CScalar x) {
    const CScalar ex = std::exp(x);
    return radial_F(rp, ex) * ex / (ex * ex - zeta2);
  };
  const double a = w0.real();
  const double im0 = w0.imag();  // in (-pi, 0]

  const double t_env = envelope_cutoff(env, tol / 10.0);
  double left = std::min(-7.0, a - 5.0);
  double right = std::max(2.5, std::log(t_env) + 0.3);

  const bool bump_up = std::abs(im0) < kBumpBand;            // k=0 pole
  const bool bump_down = std::abs(im0 + M_PI) < kBumpBand;   // k=1 pole
  if (bump_up || bump_down) right = std::max(right, a + 1.5);

  const double probe = tol / 100.0;
  while (left > -60.0 && std::abs(kernel(CScalar(left, 0.0))) > probe) {
    left -= 3.0;
  }
  while (right < 65.0 && std::abs(kernel(CScalar(right, 0.0))) > probe) {
    right += 2.0;
  }

  std::vector<CScalar> vertices;
  if (bump_up || bump_down) {
    const double apex = bump_up ? kBumpHeight : -kBumpHeight;
    vertices = {CScalar(left, 0.0), CScalar(a - kBumpHeight, 0.0),
                CScalar(a, apex), CScalar(a + kBumpHeight, 0.0),
                CScalar(right, 0.0)};
  } else {
    vertices = {CScalar(left, 0.0), CScalar(right, 0.0)};
  }
  // The winding term is known before the quadrature runs; its irreducible
  // rounding error eats into the requested tolerance, so hand the quadrature
  // only what is left of the budget.
  CScalar winding = 0.0;
  double winding_err = 0.0;
  if (n != 0) {
    const CScalar zeta0 = std::exp(w0);
    winding = static_cast<double>(n) * M_PI * kI *
              radial_F_accurate(rp, zeta0) * std::exp(-w0);
    winding_err = 5e-14 * std::abs(winding);
  }
  const double quad_tol = std::max(0.1 * tol, 0.8 * tol - winding_err);
  const QuadratureResult q = integrate_polyline(kernel, vertices, quad_tol);
  return {q.value + winding, q.error_estimate + winding_err};
}

// Raises the precise refusal for an out-of-domain point.
void check_surface_point(const RadialProfile& rp, const SurfacePoint& pt,
                         EvalMode mode) {
  const SpaceInvariants& inv = rp.ctx.inv;
  if (pt.kind != inv.parity) {
    raise(ErrorCode::InvalidSpec,
          "surface kind does not match the parity of the space");
  }
  if (mode == EvalMode::Rank1Meromorphic) {
    if (rp.ctx.space.rank != 1) {
      raise(ErrorCode::RankUnsupported,
            "meromorphic mode is defined for rank-1 spaces only");
    }
    const double reach = std::abs(pt.w) + 2.0;
    for (const DensityPole& pole : plancherel_poles(rp.ctx, reach)) {
      const double d = std::min(std::abs(pt.w - pole.location),
                                std::abs(pt.w + pole.location));
      if (d < rp.ctx.pole_guard) {
        raise(ErrorCode::NearPole,
              "surface point within pole_guard of an enumerated density pole");
      }
    }
    return;
  }
  if (inv.entire_density) return;
  if (pt.kind == Parity::Odd) {
    if (dist_to_upper_cut(pt.w, inv.branch_radius) < kCutRefusal) {
      raise(ErrorCode::OffSurface,
            "surface point on (or too close to) the spectral cut");
    }
  } else {
    if (excluded_line_distance(rp, pt.w) < kLineRefusal) {
      raise(ErrorCode::OffSurface,
            "surface point on (or too close to) an excluded half-line");
    }
  }
}

}  // namespace

SurfacePoint surface_point(const RadialProfile& rp, CScalar w) {
  return SurfacePoint{w, rp.ctx.inv.parity};
}

CScalar surface_to_z(const RadialProfile& rp, const SurfacePoint& pt) {
  if (pt.kind == Parity::Odd) return rp.ctx.inv.rho_norm_sq + pt.w * pt.w;
  return rp.ctx.inv.rho_norm_sq + std::exp(2.0 * pt.w);
}

QuadratureResult contour_integrate(const CIntegrand& fn,
                                   const ContourPath& path, double tol) {
  if (path.vertices.size() < 2) {
    raise(ErrorCode::InvalidSpec, "contour path needs at least two vertices");
  }
  return integrate_polyline(fn, path.vertices, tol);
}

std::pair<CScalar, int> reduce_to_strip(CScalar w) {
  double n = std::ceil(w.imag() / M_PI);
  CScalar w0(w.real(), w.imag() - M_PI * n);
  if (w0.imag() > 0.0) {
    n += 1.0;
    w0 = CScalar(w.real(), w.imag() - M_PI * n);
  } else if (w0.imag() <= -M_PI) {
    n -= 1.0;
    w0 = CScalar(w.real(), w.imag() - M_PI * n);
  }
  return {w0, static_cast<int>(n)};
}

double excluded_line_distance(const RadialProfile& rp, CScalar w) {
  const SpaceInvariants& inv = rp.ctx.inv;
  if (inv.parity != Parity::Even || inv.entire_density) {
    return std::numeric_limits<double>::infinity();
  }
  const double log_r = std::log(inv.branch_radius);
  const long long k0 = std::llround(w.imag() / M_PI - 0.5);
  double best = std::numeric_limits<double>::infinity();
  for (long long k = k0 - 1; k <= k0 + 1; ++k) {
    if (k == -1) continue;
    const double dy = std::abs(w.imag() - M_PI * (k + 0.5));
    const double d =
        (w.real() >= log_r) ? dy : std::hypot(log_r - w.real(), dy);
    best = std::min(best, d);
  }
  return best;
}

bool surface_point_valid(const RadialProfile& rp, const SurfacePoint& pt,
                         EvalMode mode, std::string* reason) {
  try {
    check_surface_point(rp, pt, mode);
  } catch (const EngineError& e) {
    if (reason != nullptr) *reason = e.what();
    return false;
  }
  return true;
}

Evaluation resolvent_physical(const RadialProfile& rp, CScalar z, double tol) {
  if (!(tol > 0.0)) {
    raise(ErrorCode::InvalidSpec, "tolerance must be positive");
  }
  const double dist = dist_to_spectrum(z);
  if (dist < kSpectrumEps) {
    raise(ErrorCode::OnSpectrum,
          "spectral parameter within 1e-10 of the half-line [0, inf)");
  }
  const RadialEnvelope env = radial_envelope(rp);
  const double sbar = env.min_width;
  const double t_env = envelope_cutoff(env, tol / 10.0);
  const double quad_tol = 0.8 * tol;
  const double xr = z.real() > 0.0 ? std::sqrt(z.real()) : 0.0;

  auto plain_integrand = [&](CScalar x) {
    return radial_F(rp, x) / (x * x - z);
  };
  const bool pole_outside =
      xr > t_env + 2.0 && envelope_value(env, xr - 2.0) < tol * 1e-3;
  if (dist >= 0.1 || pole_outside) {
    const double t =
        pole_outside ? t_env
                     : std::max(t_env, xr + std::max(4.0, 4.0 / std::sqrt(sbar)));
    const QuadratureResult q = integrate_polyline(
        plain_integrand, {CScalar(0.0), CScalar(t)}, quad_tol);
    return {q.value, q.error_estimate};
  }

  // Near-spectrum: subtract a Gaussian that cancels the pole exactly and
  // carries the singular part in closed form.
  const CScalar v = std::sqrt(z);  // principal branch, Re v >= 0
  const CScalar k = radial_F_accurate(rp, v) * std::exp(sbar * z);
  const double t =
      std::max(t_env, v.real() + std::max(4.0, 4.0 / std::sqrt(sbar)));
  auto smooth_integrand = [&](CScalar x) {
    return (radial_F(rp, x) - k * std::exp(-sbar * x * x)) / (x * x - z);
  };
  const CScalar closed = k * half_line_gaussian_kernel(sbar, z);
  const double closed_err = 5e-14 * std::abs(closed);
  const QuadratureResult q = integrate_polyline(
      smooth_integrand, {CScalar(0.0), CScalar(t)},
      std::max(0.1 * tol, quad_tol - closed_err));
  return {q.value + closed, q.error_estimate + closed_err};
}

Evaluation resolvent_eval(const RadialProfile& rp, const SurfacePoint& pt,
                          EvalMode mode, double tol) {
  if (!(tol > 0.0)) {
    raise(ErrorCode::InvalidSpec, "tolerance must be positive");
  }
  check_surface_point(rp, pt, mode);
  const RadialEnvelope env = radial_envelope(rp);
  if (pt.kind == Parity::Odd) return odd_eval(rp, pt.w, env, tol);
  return even_eval(rp, pt.w, env, tol);
}

Evaluation contour_resolvent(const RadialProfile& rp, CScalar w,
                             const ContourPath& path, double tol) {
  if (rp.ctx.inv.parity == Parity::Odd) {
    auto fn = [&](CScalar x) { return radial_F(rp, x) / (x * x - w * w); };
    const QuadratureResult q = contour_integrate(fn, path, tol);
    return {0.5 * q.value, 0.5 * q.error_estimate};
  }
  const auto [w0, n] = reduce_to_strip(w);
  (void)n;  // the winding term is deliberately not added here
  const CScalar zeta2 = std::exp(2.0 * w0);
  auto fn = [&](CScalar x) {
    const CScalar ex = std::exp(x);
    return radial_F(rp, ex) * ex / (ex * ex - zeta2);
  };
  const QuadratureResult q = contour_integrate(fn, path, tol);
  return {q.value, q.error_estimate};
}

CScalar residue_at_pole(const RadialProfile& rp, CScalar pole, double tol) {
  if (rp.ctx.space.rank != 1) {
    raise(ErrorCode::RankUnsupported,
          "pole residues are defined for rank-1 spaces only");
  }
  const std::vector<DensityPole> poles =
      plancherel_poles(rp.ctx, std::abs(pole) + 5.0);
  if (poles.empty()) {
    raise(ErrorCode::EmptyPoleList, "the density of this space has no poles");
  }
  int match = -1;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (std::abs(pole - poles[i].location) <= 1e-9 * (1.0 + std::abs(pole))) {
      match = static_cast<int>(i);
      break;
    }
  }
  if (match < 0) {
    raise(ErrorCode::InvalidSpec, "pole is not in the enumerated list");
  }
  const CScalar center = poles[static_cast<std::size_t>(match)].location;
  double nearest = 2.0 * std::abs(center);  // the mirrored pole at -center
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (static_cast<int>(i) == match) continue;
    nearest = std::min(nearest, std::abs(center - poles[i].location));
    nearest = std::min(nearest, std::abs(center + poles[i].location));
  }
  const double radius = std::min(1e-2, 0.5 * nearest);
  if (radius < 10.0 * rp.ctx.pole_guard) {
    raise(ErrorCode::NearPole,
          "pole separation too small for a clean residue circle");
  }
  auto fn = [&](CScalar xi) { return radial_F(rp, xi); };
  return circle_mean(fn, center, radius, tol).value;
}

}  // namespace symres
