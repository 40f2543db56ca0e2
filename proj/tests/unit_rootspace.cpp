#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "symres/errors.hpp"
#include "symres/rootspace.hpp"

using namespace symres;

namespace {

SymmetricSpaceSpec simple_rank1(int m, int m2) {
  SymmetricSpaceSpec s;
  s.name = "test";
  s.rank = 1;
  s.roots = {{{1.0}, m, m2}};
  s.factor_partition = {0};
  return s;
}

}  // namespace

TEST_CASE("catalog holds the nine built-in spaces and all validate") {
  const std::vector<std::string> names = catalog_names();
  REQUIRE(names.size() == 9);
  for (const std::string& n :
       {"H2", "H3", "H4", "H5", "H6", "CH2", "SL3R", "SL3C", "SL4R"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
    const SymmetricSpaceSpec space = catalog_get(n);
    CHECK_NOTHROW(validate_spec(space));
    CHECK(space.name == n);
  }
  try {
    catalog_get("nosuch");
    FAIL("expected UnknownSpace");
  } catch (const EngineError& err) {
    CHECK(err.code() == ErrorCode::UnknownSpace);
  }
}

TEST_CASE("multiplicity factor in the branch radius") {
  CHECK(j_factor(1) == doctest::Approx(0.5));
  CHECK(j_factor(2) == doctest::Approx(2.0));
  CHECK(j_factor(3) == doctest::Approx(1.5));
  CHECK(j_factor(4) == doctest::Approx(3.0));
  CHECK(j_factor(5) == doctest::Approx(2.5));
}

TEST_CASE("catalog invariants") {
  struct Row {
    const char* name;
    double rho_sq;
    double radius;
    Parity parity;
    bool entire;
  };
  const std::vector<Row> rows = {
      {"H2", 0.25, 0.5, Parity::Odd, false},
      {"H3", 1.0, 2.0, Parity::Odd, true},
      {"H4", 2.25, 1.5, Parity::Odd, false},
      {"H5", 4.0, 3.0, Parity::Odd, true},
      {"H6", 6.25, 2.5, Parity::Odd, false},
      {"CH2", 4.0, 2.0, Parity::Odd, false},
      {"SL3R", 2.0, std::sqrt(2.0) / 2.0, Parity::Even, false},
      {"SL3C", 8.0, 2.0 * std::sqrt(2.0), Parity::Even, true},
      {"SL4R", 5.0, std::sqrt(2.0) / 2.0, Parity::Odd, false},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const SpaceInvariants inv = invariants(catalog_get(row.name));
    CHECK(inv.rho_norm_sq == doctest::Approx(row.rho_sq).epsilon(1e-14));
    CHECK(inv.branch_radius == doctest::Approx(row.radius).epsilon(1e-14));
    CHECK(inv.parity == row.parity);
    CHECK(inv.entire_density == row.entire);
  }
}

TEST_CASE("rho is half the multiplicity-weighted root sum") {
  // CH2 has one indecomposable root with m = 2, m2 = 1, so
  // rho = (1/2)(m + 2 m2) alpha = 2 alpha.
  const SymmetricSpaceSpec ch2 = catalog_get("CH2");
  const RealVec r = rho(ch2);
  REQUIRE(r.size() == 1);
  const double alpha_len = std::sqrt(norm_sq(ch2.roots[0].vector));
  CHECK(std::abs(r[0]) == doctest::Approx(2.0 * alpha_len).epsilon(1e-14));
}

TEST_CASE("reflection closure sizes") {
  CHECK(weyl_generate(catalog_get("H2")).elements.size() == 2);
  CHECK(weyl_generate(catalog_get("CH2")).elements.size() == 2);
  CHECK(weyl_generate(catalog_get("SL3R")).elements.size() == 6);
  CHECK(weyl_generate(catalog_get("SL3C")).elements.size() == 6);
  CHECK(weyl_generate(catalog_get("SL4R")).elements.size() == 24);
}

TEST_CASE("reflection closure elements are orthogonal and permute roots") {
  const SymmetricSpaceSpec space = catalog_get("SL3R");
  const WeylGroup group = weyl_generate(space);
  for (const auto& mat : group.elements) {
    // Orthogonality: |M v| == |v| for the first root.
    const RealVec v = space.roots[0].vector;
    const RealVec mv = apply_matrix(mat, group.rank, v);
    CHECK(norm_sq(mv) == doctest::Approx(norm_sq(v)).epsilon(1e-12));
    // M maps roots to +- roots.
    bool found = false;
    for (const RestrictedRoot& root : space.roots) {
      RealVec d_plus = add(mv, scaled(-1.0, root.vector));
      RealVec d_minus = add(mv, root.vector);
      if (norm_sq(d_plus) < 1e-18 || norm_sq(d_minus) < 1e-18) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("closure bound overflow raises ClosureOverflow") {
  try {
    weyl_generate(catalog_get("SL4R"), 10);
    FAIL("expected ClosureOverflow");
  } catch (const EngineError& err) {
    CHECK(err.code() == ErrorCode::ClosureOverflow);
  }
}

TEST_CASE("structural validation rejects malformed data") {
  auto expect_invalid = [](SymmetricSpaceSpec s) {
    try {
      validate_spec(s);
      FAIL("expected InvalidSpec");
    } catch (const EngineError& err) {
      CHECK(err.code() == ErrorCode::InvalidSpec);
    }
  };

  expect_invalid([] {
    SymmetricSpaceSpec s = simple_rank1(1, 0);
    s.rank = 0;
    return s;
  }());
  expect_invalid([] {
    SymmetricSpaceSpec s = simple_rank1(0, 0);  // m < 1
    return s;
  }());
  expect_invalid([] {
    SymmetricSpaceSpec s = simple_rank1(1, 1);  // odd m forces m2 = 0
    return s;
  }());
  expect_invalid([] {
    SymmetricSpaceSpec s = simple_rank1(1, 0);
    s.roots[0].vector = {1.0, 0.0};  // wrong dimension
    return s;
  }());
  expect_invalid([] {
    SymmetricSpaceSpec s = simple_rank1(1, 0);
    s.factor_partition = {0, 1};  // wrong partition length
    return s;
  }());
  expect_invalid([] {
    // Non-crystallographic pair in one factor.
    SymmetricSpaceSpec s;
    s.rank = 2;
    s.roots = {{{1.0, 0.0}, 1, 0}, {{0.3, 1.1}, 1, 0}};
    s.factor_partition = {0, 0};
    return s;
  }());
  expect_invalid([] {
    // Distinct factors must be orthogonal.
    SymmetricSpaceSpec s;
    s.rank = 2;
    s.roots = {{{1.0, 0.0}, 1, 0}, {{1.0, 1.0}, 1, 0}};
    s.factor_partition = {0, 1};
    return s;
  }());
}

TEST_CASE("surface kind follows the rank parity") {
  CHECK(surface_kind(catalog_get("H4")).parity == Parity::Odd);
  CHECK(surface_kind(catalog_get("SL3C")).parity == Parity::Even);
  CHECK(surface_kind(catalog_get("SL3C")).entire == true);
  CHECK(surface_kind(catalog_get("SL4R")).parity == Parity::Odd);
  CHECK(surface_kind(catalog_get("SL4R")).entire == false);
}
