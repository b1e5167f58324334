#include "ncsing/error.hpp"

namespace ncsing {

std::string_view codeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::TransitionConstraint: return "TransitionConstraint";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::TriangleConstraintViolated: return "TriangleConstraintViolated";
    case ErrorCode::SaturationLimit: return "SaturationLimit";
    case ErrorCode::NotAWall: return "NotAWall";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::NegativeDefect: return "NegativeDefect";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(codeName(code)) + ": " + detail), code_(code) {}

}  // namespace ncsing
