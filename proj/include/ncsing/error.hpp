#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncsing {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  ZeroScalar,
  DisconnectedGraph,
  InvalidGraph,
  NonOrientable,
  TwistMismatch,
  TransitionConstraint,
  GraphMismatch,
  TriangleConstraintViolated,
  SaturationLimit,
  NotAWall,
  InvalidFan,
  NegativeDefect,
};

std::string_view codeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; what()
// is "<Code>: <detail>" so the CLI can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncsing
