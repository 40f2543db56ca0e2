#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "symres/continuation.hpp"
#include "symres/errors.hpp"
#include "symres/oracles.hpp"
#include "symres/radial.hpp"

using namespace symres;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298;

RadialProfile gaussian_radial(const char* name) {
  const SymmetricSpaceSpec space = catalog_get(name);
  return make_radial_profile(space, gaussian_profile(space.rank));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const EngineError& err) {
    return err.code();
  }
  FAIL("expected an EngineError");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("surface coordinate maps to the spectral parameter") {
  const RadialProfile h2 = gaussian_radial("H2");
  const SurfacePoint odd_pt = surface_point(h2, CScalar(0.3, -0.4));
  CHECK(odd_pt.kind == Parity::Odd);
  const CScalar z_odd = surface_to_z(h2, odd_pt);
  const CScalar w(0.3, -0.4);
  CHECK(std::abs(z_odd - (0.25 + w * w)) <= 1e-15);

  const RadialProfile sl3r = gaussian_radial("SL3R");
  const SurfacePoint even_pt = surface_point(sl3r, CScalar(0.1, -1.2));
  CHECK(even_pt.kind == Parity::Even);
  const CScalar z_even = surface_to_z(sl3r, even_pt);
  const CScalar v(0.1, -1.2);
  CHECK(std::abs(z_even - (2.0 + std::exp(2.0 * v))) <= 1e-14);
}

TEST_CASE("strip reduction lands in (-pi, 0] and reconstructs w") {
  struct Case {
    CScalar w;
    int n;
  };
  // Im w = 0 is already the strip ceiling (n = 0); Im w = -pi is the open
  // floor, so it rolls up to the ceiling of the next strip down (n = -1).
  for (const Case& c : {Case{{0.2, 3.3}, 2}, Case{{0.7, 0.0}, 0},
                        Case{{-0.4, -1.5}, 0}, Case{{0.5, -3.3}, -1},
                        Case{{0.0, -kPi}, -1}}) {
    CAPTURE(c.w.real());
    CAPTURE(c.w.imag());
    auto [w0, n] = reduce_to_strip(c.w);
    CHECK(n == c.n);
    CHECK(std::abs(w0 + CScalar(0.0, kPi * n) - c.w) <= 1e-12);
    CHECK(w0.imag() <= 0.0 + 1e-15);
    CHECK(w0.imag() > -kPi - 1e-12);
  }
}

TEST_CASE("excluded half-lines of non-entire even surfaces") {
  const RadialProfile sl3r = gaussian_radial("SL3R");
  const double logr = std::log(std::sqrt(2.0) / 2.0);

  // Directly on the k = 0 line.
  CHECK(excluded_line_distance(sl3r, CScalar(1.0, kPi / 2.0)) <= 1e-12);
  // Left of the line's start: distance to the endpoint at Re w = log r.
  CHECK(excluded_line_distance(sl3r, CScalar(-1.0, kPi / 2.0)) ==
        doctest::Approx(logr - (-1.0)).epsilon(1e-12));
  // The k = -1 line (the physical-strip centre height) is NOT excluded.
  CHECK(excluded_line_distance(sl3r, CScalar(1.0, -kPi / 2.0)) ==
        doctest::Approx(kPi).epsilon(1e-12));

  // Entire even surface has no excluded lines at all.
  const RadialProfile sl3c = gaussian_radial("SL3C");
  CHECK(std::isinf(excluded_line_distance(sl3c, CScalar(1.0, kPi / 2.0))));
}

TEST_CASE("physical-sheet evaluation: closed form and spectrum refusal") {
  const RadialProfile h3 = gaussian_radial("H3");
  const Evaluation phys = resolvent_physical(h3, CScalar(-1.0, 0.0));
  CHECK(std::abs(phys.value - 0.4291604292587808569) <= 5e-10);
  CHECK(phys.error_estimate <= 1e-9);

  CHECK(code_of([&] { resolvent_physical(h3, CScalar(2.0, 0.0)); }) ==
        ErrorCode::OnSpectrum);
  CHECK(code_of([&] { resolvent_physical(h3, CScalar(1e-12, 0.0)); }) ==
        ErrorCode::OnSpectrum);
  // Close to the half-line but not on it: must evaluate, consistently with
  // the off-axis value (subtraction regime).
  const Evaluation near = resolvent_physical(h3, CScalar(1.5, 1e-4));
  CHECK(near.error_estimate <= 1e-8);
}

TEST_CASE("odd-kind evaluation matches the entire closed form everywhere") {
  const RadialProfile h3 = gaussian_radial("H3");
  // Points in all branches: upper half-plane (continued), real axis
  // (boundary value), lower half-plane (physical), origin (removable).
  for (CScalar w : {CScalar(0.5, 0.5), CScalar(1.3, 0.0),
                    CScalar(0.5, -0.5), CScalar(0.0, -1.0),
                    CScalar(0.0, 2.0), CScalar(-1.7, 0.3)}) {
    CAPTURE(w.real());
    CAPTURE(w.imag());
    const Evaluation got =
        resolvent_eval(h3, surface_point(h3, w), EvalMode::General, 1e-11);
    const CScalar want = h3_gaussian_resolvent(w, 1.0);
    CHECK(std::abs(got.value - want) <= 1e-9 * (1.0 + std::abs(want)));
  }

  const Evaluation origin =
      resolvent_eval(h3, surface_point(h3, CScalar(0.0, 0.0)));
  CHECK(std::abs(origin.value - kSqrtPi) <= 1e-10);
}

TEST_CASE("physical-sheet equivalence across kinds") {
  struct Case {
    const char* name;
    CScalar w;
  };
  for (const Case& c : {Case{"H2", {0.7, -0.8}}, Case{"CH2", {-0.4, -1.2}},
                        Case{"SL3R", {0.4, -1.3}}}) {
    CAPTURE(c.name);
    const RadialProfile rp = gaussian_radial(c.name);
    const SurfacePoint pt = surface_point(rp, c.w);
    const Evaluation surf = resolvent_eval(rp, pt, EvalMode::General, 1e-11);
    const CScalar z_shift = surface_to_z(rp, pt) - rp.ctx.inv.rho_norm_sq;
    const Evaluation phys = resolvent_physical(rp, z_shift, 1e-11);
    CHECK(std::abs(surf.value - phys.value) <=
          1e-8 * (1.0 + std::abs(phys.value)));
  }
}

TEST_CASE("even-kind jump relation across the strip boundary") {
  const RadialProfile sl3r = gaussian_radial("SL3R");
  const CScalar w(0.4, -1.3);
  const Evaluation low = resolvent_eval(sl3r, surface_point(sl3r, w));
  const Evaluation high =
      resolvent_eval(sl3r, surface_point(sl3r, w + CScalar(0.0, kPi)));
  const CScalar f = radial_F(sl3r, std::exp(w));
  const CScalar jump = CScalar(0.0, kPi) * f * std::exp(-w);
  CHECK(std::abs(high.value - low.value - jump) <= 1e-10);
}

TEST_CASE("strip boundary value equals the half-residue deformation") {
  // At real w the evaluation is defined as the limit from the physical
  // strip, i.e. the value along a contour passing above the kernel pole.
  const RadialProfile sl3r = gaussian_radial("SL3R");
  const CScalar w(0.3, 0.0);
  const Evaluation boundary =
      resolvent_eval(sl3r, surface_point(sl3r, w), EvalMode::General, 1e-10);

  ContourPath above;
  above.vertices = {CScalar(-10.0, 0.0), CScalar(-0.2, 0.0),
                    CScalar(-0.2, 0.4),  CScalar(0.8, 0.4),
                    CScalar(0.8, 0.0),   CScalar(4.0, 0.0)};
  const Evaluation deformed = contour_resolvent(sl3r, w, above, 1e-10);
  CHECK(std::abs(boundary.value - deformed.value) <=
        1e-8 * (1.0 + std::abs(boundary.value)));
}

TEST_CASE("domain predicate and refusal codes") {
  const RadialProfile h2 = gaussian_radial("H2");
  std::string reason;

  // Upper cut of a rank-1 space: refused in general mode...
  const SurfacePoint on_cut = surface_point(h2, CScalar(0.0, 0.6));
  CHECK_FALSE(surface_point_valid(h2, on_cut, EvalMode::General, &reason));
  CHECK(reason.find("OffSurface") != std::string::npos);
  // ...but fine in the meromorphic mode, which only guards the poles.
  CHECK(surface_point_valid(h2, on_cut, EvalMode::Rank1Meromorphic));
  const SurfacePoint at_pole = surface_point(h2, CScalar(0.0, 0.5));
  CHECK_FALSE(
      surface_point_valid(h2, at_pole, EvalMode::Rank1Meromorphic, &reason));
  CHECK(reason.find("NearPole") != std::string::npos);

  // Lower half-plane is always fine.
  CHECK(surface_point_valid(h2, surface_point(h2, CScalar(0.4, -0.3))));

  // Excluded half-line of the even surface.
  const RadialProfile sl3r = gaussian_radial("SL3R");
  const SurfacePoint excl = surface_point(sl3r, CScalar(1.0, kPi / 2.0));
  CHECK_FALSE(surface_point_valid(sl3r, excl, EvalMode::General, &reason));
  CHECK(reason.find("OffSurface") != std::string::npos);
  // The entire even space has no excluded lines.
  const RadialProfile sl3c = gaussian_radial("SL3C");
  CHECK(surface_point_valid(sl3c, surface_point(sl3c, CScalar(1.0, kPi / 2))));

  // Kind mismatch is a configuration error.
  SurfacePoint mismatched = surface_point(sl3r, CScalar(0.2, -0.2));
  mismatched.kind = Parity::Odd;
  CHECK_FALSE(surface_point_valid(sl3r, mismatched, EvalMode::General,
                                  &reason));
  CHECK(reason.find("InvalidSpec") != std::string::npos);

  // Meromorphic continuation is a rank-1 facility.
  CHECK(code_of([&] {
          resolvent_eval(sl3r, surface_point(sl3r, CScalar(0.2, -0.2)),
                         EvalMode::Rank1Meromorphic);
        }) == ErrorCode::RankUnsupported);
}

TEST_CASE("meromorphic continuation through the cut") {
  // Between the poles at i/2 and 3i/2 the rank-1 evaluation continues
  // smoothly across the imaginary axis: the derivative is steep there, so
  // test smoothness directly.  A first difference that halves with the step
  // and a small second difference rule out any branch jump at Re w = 0.
  const RadialProfile h2 = gaussian_radial("H2");
  const auto at = [&](double re) {
    const SurfacePoint pt = surface_point(h2, CScalar(re, 0.9));
    return resolvent_eval(h2, pt, EvalMode::Rank1Meromorphic, 1e-11);
  };
  const Evaluation g0 = at(0.0);
  const Evaluation g1 = at(0.01);
  const Evaluation g2 = at(0.02);
  const double d1 = std::abs(g1.value - g0.value);
  const double d2 = std::abs(g2.value - g1.value);
  CHECK(d1 > 0.0);
  CHECK(std::abs(d2 / d1 - 1.0) <= 0.05);  // locally linear, no jump
  CHECK(std::abs(g2.value - 2.0 * g1.value + g0.value) <=
        0.02 * (1.0 + std::abs(g0.value)));
  CHECK(g0.error_estimate <= 1e-9);
}

TEST_CASE("residues at enumerated poles") {
  const RadialProfile h2 = gaussian_radial("H2");
  const CScalar lowest = residue_at_pole(h2, CScalar(0.0, 0.5));
  // Meromorphic F has residue 2 e^{1/4} * (i/2) at i/2 for the unit
  // Gaussian profile: profile * density residue * both antipodal nodes.
  CHECK(std::abs(lowest - CScalar(0.0, 1.2840254166877414)) <=
        1e-10 * 1.29);
  const CScalar second = residue_at_pole(h2, CScalar(0.0, 2.5));
  CHECK(std::abs(second) > 1e-12);

  CHECK(code_of([&] {
          residue_at_pole(gaussian_radial("SL3R"), CScalar(0.0, 0.5));
        }) == ErrorCode::RankUnsupported);
  CHECK(code_of([&] {
          residue_at_pole(gaussian_radial("H3"), CScalar(0.0, 2.0));
        }) == ErrorCode::EmptyPoleList);
  CHECK(code_of([&] { residue_at_pole(h2, CScalar(0.0, 0.37)); }) ==
        ErrorCode::InvalidSpec);
}

TEST_CASE("contour integration plumbing") {
  const RadialProfile h3 = gaussian_radial("H3");
  ContourPath too_short;
  too_short.vertices = {CScalar(0.0, 0.0)};
  CHECK(code_of([&] {
          contour_resolvent(h3, CScalar(0.5, 0.5), too_short, 1e-10);
        }) == ErrorCode::InvalidSpec);

  // A straight path through the tails reproduces the raw kernel integral;
  // for Im w > 0 it differs from the continued value by the full residue
  // correction 2 pi i F(w) / (2 w).
  const CScalar w(0.5, 0.5);
  ContourPath straight;
  straight.vertices = {CScalar(-8.0, 0.0), CScalar(8.0, 0.0)};
  const Evaluation raw = contour_resolvent(h3, w, straight, 1e-11);
  const Evaluation continued =
      resolvent_eval(h3, surface_point(h3, w), EvalMode::General, 1e-11);
  const CScalar correction =
      CScalar(0.0, kPi) * radial_F(h3, w) / w;
  CHECK(std::abs(continued.value - (raw.value - correction)) <= 1e-9);
}
