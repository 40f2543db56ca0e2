#include "symres/errors.hpp"

namespace symres {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSpace: return "UnknownSpace";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::AtPole: return "AtPole";
    case ErrorCode::NearPole: return "NearPole";
    case ErrorCode::OffDomain: return "OffDomain";
    case ErrorCode::OffSurface: return "OffSurface";
    case ErrorCode::OnSpectrum: return "OnSpectrum";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::BadResolution: return "BadResolution";
    case ErrorCode::EmptyPoleList: return "EmptyPoleList";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSpace:
    case ErrorCode::InvalidSpec:
    case ErrorCode::ClosureOverflow:
    case ErrorCode::RankUnsupported:
    case ErrorCode::BadResolution:
    case ErrorCode::EmptyPoleList:
      return 2;
    case ErrorCode::OffDomain:
    case ErrorCode::OffSurface:
    case ErrorCode::OnSpectrum:
      return 3;
    case ErrorCode::AtPole:
    case ErrorCode::NearPole:
      return 4;
    case ErrorCode::NoConvergence:
      return 5;
  }
  return 1;
}

}  // namespace symres
