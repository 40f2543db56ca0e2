#include <doctest.h>

#include <cmath>
#include <complex>

#include "symres/oracles.hpp"
#include "symres/radial.hpp"

using namespace symres;

namespace {

RadialProfile gaussian_radial(const char* name) {
  const SymmetricSpaceSpec space = catalog_get(name);
  return make_radial_profile(space, gaussian_profile(space.rank));
}

}  // namespace

TEST_CASE("closed-form resolvent reference values") {
  // Values computed with 30-digit arbitrary-precision arithmetic from
  // kappa * (sqrt(pi) - i pi w exp(-w^2) erfc(i w)).
  struct Ref {
    CScalar w;
    CScalar value;
  };
  for (const Ref& ref :
       {Ref{{0.3, 0.4}, {2.954296908992366, -2.2217136172013383}},
        Ref{{0.0, -1.0}, {0.4291604292587808569, 0.0}},
        Ref{{1.3, 0.0}, {-0.455225606232417917283, -0.7535907353263388766}},
        Ref{{0.5, 0.5}, {1.823770364613863615628, -3.787736148209254467}}}) {
    CAPTURE(ref.w.real());
    CAPTURE(ref.w.imag());
    const CScalar got = h3_gaussian_resolvent(ref.w, 1.0);
    CHECK(std::abs(got - ref.value) <= 1e-12 * (1.0 + std::abs(ref.value)));
  }

  // The prefactor is linear.
  const CScalar base = h3_gaussian_resolvent(CScalar(0.3, 0.4), 1.0);
  const CScalar scaled = h3_gaussian_resolvent(CScalar(0.3, 0.4), 2.5);
  CHECK(std::abs(scaled - 2.5 * base) <= 1e-13 * std::abs(scaled));
}

TEST_CASE("convention gate: engine agrees with the closed form on the grid") {
  const OracleReport report = faddeeva_convention_gate();
  CHECK(report.passed);
  CHECK(report.threshold == doctest::Approx(1e-9));
  CHECK(report.grid.size() == 25);  // the full 5x5 grid, origin included
  CHECK(report.max_rel_err <= 1e-10);
  CHECK(report.max_rel_err > 0.0);

  // The report invariant: passed iff max_rel_err <= threshold.
  const OracleReport impossible = faddeeva_convention_gate(0.0);
  CHECK_FALSE(impossible.passed);
  CHECK(impossible.max_rel_err == doctest::Approx(report.max_rel_err));
}

TEST_CASE("deformed contours: homotopic paths agree, crossing ones do not") {
  const RadialProfile h3 = gaussian_radial("H3");
  const CScalar w(0.5, 0.5);

  ContourPath straight;
  straight.vertices = {CScalar(-8.0, 0.0), CScalar(8.0, 0.0)};

  ContourPath dipped;
  dipped.vertices = {CScalar(-8.0, 0.0), CScalar(-2.0, 0.0),
                     CScalar(-2.0, -0.2), CScalar(2.0, -0.2),
                     CScalar(2.0, 0.0),  CScalar(8.0, 0.0)};

  const OracleReport same = cross_contour_check(h3, w, straight, dipped);
  CHECK(same.passed);
  CHECK(same.max_rel_err <= 1e-8);

  // A path climbing over the kernel pole at +w picks up its residue.
  ContourPath crossing;
  crossing.vertices = {CScalar(-8.0, 0.0), CScalar(-2.0, 0.0),
                       CScalar(-2.0, 1.2), CScalar(2.0, 1.2),
                       CScalar(2.0, 0.0),  CScalar(8.0, 0.0)};
  const OracleReport different = cross_contour_check(h3, w, straight,
                                                     crossing);
  CHECK_FALSE(different.passed);
  CHECK(different.max_rel_err > 1e-3);
}
