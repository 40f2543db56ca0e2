#pragma once

#include <string>

#include "symres/profile.hpp"
#include "symres/rootspace.hpp"

namespace symres {

/// JSON schema for custom spaces:
///   {"name": str, "rank": int,
///    "roots": [{"vector": [..], "m": int, "m2": int}, ...],
///    "factor_partition": [int, ...]}
/// Raises InvalidSpec on malformed input; the result is validated.
SymmetricSpaceSpec parse_space_text(const std::string& text);
SymmetricSpaceSpec load_space_file(const std::string& path);

/// JSON schema for profiles:
///   {"symmetrized": bool (optional),
///    "terms": [{"exponents": [..], "coeff_re": f, "coeff_im": f,
///               "width": f}, ...]}
SpectralProfile parse_profile_text(const std::string& text, int rank);

/// Accepts either a path to a profile file or inline JSON.
SpectralProfile load_or_parse_profile(const std::string& path_or_json,
                                      int rank);

std::string space_to_text(const SymmetricSpaceSpec& space);
std::string profile_to_text(const SpectralProfile& profile);

}  // namespace symres
