#pragma once

#include <stdexcept>
#include <string>

namespace symres {

/// Every failure the engine can signal. The CLI maps these onto process exit
/// codes (see exit_code_for); the library throws EngineError carrying one.
enum class ErrorCode {
  UnknownSpace,    ///< name not in the catalog
  InvalidSpec,     ///< malformed space/profile/config data
  ClosureOverflow, ///< reflection-group closure exceeded its bound
  AtPole,          ///< argument sits on a Gamma pole
  NearPole,        ///< argument within the pole guard of a density pole
  OffDomain,       ///< radial argument on a branch cut
  OffSurface,      ///< surface point outside the valid continuation domain
  OnSpectrum,      ///< spectral parameter on the essential spectrum
  NoConvergence,   ///< adaptive quadrature exhausted its refinement depth
  RankUnsupported, ///< operation defined only for rank-1 spaces
  BadResolution,   ///< sphere rule resolution too small
  EmptyPoleList,   ///< residue requested but the space has no density poles
};

const char* error_code_name(ErrorCode code);

/// Process exit code for a failure class:
///   2 configuration / space-definition problems,
///   3 point outside the valid domain of the requested operation,
///   4 too close to a pole,
///   5 quadrature non-convergence.
int exit_code_for(ErrorCode code);

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw EngineError(code, detail);
}

}  // namespace symres
