#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "symres/errors.hpp"
#include "symres/profile.hpp"
#include "symres/rootspace.hpp"
#include "symres/spaceio.hpp"

using namespace symres;

namespace {

ErrorCode parse_space_code(const std::string& text) {
  try {
    parse_space_text(text);
  } catch (const EngineError& err) {
    return err.code();
  }
  FAIL("expected an EngineError");
  return ErrorCode::UnknownSpace;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("space definitions parse with defaults applied") {
  const SymmetricSpaceSpec space = parse_space_text(
      R"({"name":"halfplane","rank":1,"roots":[{"vector":[1.0],"m":1}]})");
  CHECK(space.name == "halfplane");
  CHECK(space.rank == 1);
  REQUIRE(space.roots.size() == 1);
  CHECK(space.roots[0].m == 1);
  CHECK(space.roots[0].m2 == 0);                 // defaulted
  REQUIRE(space.factor_partition.size() == 1);   // defaulted to zeros
  CHECK(space.factor_partition[0] == 0);

  const SpaceInvariants inv = invariants(space);
  CHECK(inv.rho_norm_sq == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(inv.branch_radius == doctest::Approx(0.5).epsilon(1e-14));

  const SymmetricSpaceSpec unnamed = parse_space_text(
      R"({"rank":1,"roots":[{"vector":[1.0],"m":2}]})");
  CHECK(unnamed.name == "custom");
}

TEST_CASE("space serialization round-trips through the parser") {
  for (const char* name : {"H2", "CH2", "SL3R", "SL4R"}) {
    CAPTURE(name);
    const SymmetricSpaceSpec original = catalog_get(name);
    const SymmetricSpaceSpec reparsed =
        parse_space_text(space_to_text(original));
    CHECK(reparsed.name == original.name);
    CHECK(reparsed.rank == original.rank);
    REQUIRE(reparsed.roots.size() == original.roots.size());
    const SpaceInvariants a = invariants(original);
    const SpaceInvariants b = invariants(reparsed);
    CHECK(a.rho_norm_sq == doctest::Approx(b.rho_norm_sq).epsilon(1e-15));
    CHECK(a.branch_radius == doctest::Approx(b.branch_radius).epsilon(1e-15));
  }
}

TEST_CASE("malformed space definitions are refused") {
  CHECK(parse_space_code("not json at all") == ErrorCode::InvalidSpec);
  CHECK(parse_space_code("{}") == ErrorCode::InvalidSpec);
  CHECK(parse_space_code(R"({"rank":1,"roots":[]})") ==
        ErrorCode::InvalidSpec);
  CHECK(parse_space_code(
            R"({"rank":1,"roots":[{"vector":[1.0,0.0],"m":1}]})") ==
        ErrorCode::InvalidSpec);
  CHECK(parse_space_code(
            R"({"rank":1,"roots":[{"vector":[1.0],"m":1,"m2":3}]})") ==
        ErrorCode::InvalidSpec);
}

TEST_CASE("space files load and missing files are refused") {
  const TempFile file("symres_test_space.json",
                      space_to_text(catalog_get("H4")));
  const SymmetricSpaceSpec loaded = load_space_file(file.path.string());
  CHECK(loaded.name == "H4");
  try {
    load_space_file("/nonexistent/path/space.json");
    FAIL("expected InvalidSpec");
  } catch (const EngineError& err) {
    CHECK(err.code() == ErrorCode::InvalidSpec);
  }
}

TEST_CASE("profile parsing, defaults, and round trip") {
  const SpectralProfile profile = parse_profile_text(
      R"({"symmetrized":true,
          "terms":[{"exponents":[2],"coeff_re":1.5,"width":0.5}]})",
      1);
  CHECK(profile.symmetrized);
  REQUIRE(profile.terms.size() == 1);
  const ComplexVec lam{CScalar(0.4, 0.0)};
  // 1.5 * 0.4^2 * exp(-0.5 * 0.16)
  CHECK(std::abs(profile_eval(profile, lam) -
                 1.5 * 0.16 * std::exp(-0.08)) <= 1e-14);

  const SpectralProfile reparsed =
      parse_profile_text(profile_to_text(profile), 1);
  CHECK(std::abs(profile_eval(reparsed, lam) -
                 profile_eval(profile, lam)) <= 1e-15);
  CHECK(reparsed.symmetrized == profile.symmetrized);

  try {
    parse_profile_text(R"({"terms":[{"exponents":[2],"coeff_re":1.0,
                                     "width":-1.0}]})",
                       1);
    FAIL("expected InvalidSpec");
  } catch (const EngineError& err) {
    CHECK(err.code() == ErrorCode::InvalidSpec);
  }
}

TEST_CASE("profile source dispatch: empty, inline, or file path") {
  const SpectralProfile unit = load_or_parse_profile("", 2);
  const ComplexVec lam{CScalar(0.3, 0.0), CScalar(-0.2, 0.1)};
  const SpectralProfile direct = gaussian_profile(2);
  CHECK(std::abs(profile_eval(unit, lam) - profile_eval(direct, lam)) <=
        1e-15);

  const SpectralProfile inline_p = load_or_parse_profile(
      R"({"terms":[{"exponents":[0,0],"coeff_re":2.0,"width":1.0}]})", 2);
  CHECK(std::abs(profile_eval(inline_p, lam) -
                 2.0 * profile_eval(direct, lam)) <= 1e-14);

  const TempFile file(
      "symres_test_profile.json",
      R"({"terms":[{"exponents":[0,0],"coeff_re":3.0,"width":1.0}]})");
  const SpectralProfile from_file =
      load_or_parse_profile(file.path.string(), 2);
  CHECK(std::abs(profile_eval(from_file, lam) -
                 3.0 * profile_eval(direct, lam)) <= 1e-14);
}
