#include "symres/spaceio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symres/errors.hpp"

namespace symres {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    raise(ErrorCode::InvalidSpec, std::string("malformed JSON in ") + what);
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::InvalidSpec, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SymmetricSpaceSpec parse_space_text(const std::string& text) {
  const json j = parse_json(text, "space definition");
  SymmetricSpaceSpec space;
  try {
    space.name = j.value("name", std::string("custom"));
    space.rank = j.at("rank").get<int>();
    for (const json& jr : j.at("roots")) {
      RestrictedRoot root;
      root.vector = jr.at("vector").get<std::vector<double>>();
      root.m = jr.at("m").get<int>();
      root.m2 = jr.value("m2", 0);
      space.roots.push_back(std::move(root));
    }
    if (j.contains("factor_partition")) {
      space.factor_partition = j.at("factor_partition").get<std::vector<int>>();
    } else {
      space.factor_partition.assign(space.roots.size(), 0);
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidSpec,
          std::string("bad space definition: ") + e.what());
  }
  validate_spec(space);
  return space;
}

SymmetricSpaceSpec load_space_file(const std::string& path) {
  return parse_space_text(read_file(path));
}

SpectralProfile parse_profile_text(const std::string& text, int rank) {
  const json j = parse_json(text, "profile");
  SpectralProfile profile;
  profile.rank = rank;
  try {
    profile.symmetrized = j.value("symmetrized", false);
    for (const json& jt : j.at("terms")) {
      ProfileTerm term;
      Monomial mono;
      mono.exponents = jt.at("exponents").get<std::vector<int>>();
      mono.coeff = CScalar(jt.at("coeff_re").get<double>(),
                           jt.value("coeff_im", 0.0));
      term.poly.monomials.push_back(std::move(mono));
      term.width = jt.at("width").get<double>();
      profile.terms.push_back(std::move(term));
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidSpec, std::string("bad profile: ") + e.what());
  }
  validate_profile(profile);
  return profile;
}

SpectralProfile load_or_parse_profile(const std::string& path_or_json,
                                      int rank) {
  if (path_or_json.empty()) {
    return gaussian_profile(rank);
  }
  // Anything that is not inline JSON is treated as a path.
  const bool inline_json =
      path_or_json.find('{') != std::string::npos;
  if (inline_json) {
    return parse_profile_text(path_or_json, rank);
  }
  return parse_profile_text(read_file(path_or_json), rank);
}

std::string space_to_text(const SymmetricSpaceSpec& space) {
  json j;
  j["name"] = space.name;
  j["rank"] = space.rank;
  j["roots"] = json::array();
  for (const RestrictedRoot& root : space.roots) {
    j["roots"].push_back(
        {{"vector", root.vector}, {"m", root.m}, {"m2", root.m2}});
  }
  j["factor_partition"] = space.factor_partition;
  return j.dump(2);
}

std::string profile_to_text(const SpectralProfile& profile) {
  json j;
  j["symmetrized"] = profile.symmetrized;
  j["terms"] = json::array();
  for (const ProfileTerm& term : profile.terms) {
    for (const Monomial& mono : term.poly.monomials) {
      j["terms"].push_back({{"exponents", mono.exponents},
                            {"coeff_re", mono.coeff.real()},
                            {"coeff_im", mono.coeff.imag()},
                            {"width", term.width}});
    }
  }
  return j.dump(2);
}

}  // namespace symres
