#pragma once

#include <stdexcept>
#include <string>

namespace haga {

enum class ErrorCode {
  DegenerateInput,
  NegativeInput,
  NotASquare,
  InvalidTriangle,
  InvalidSquare,
  UnsupportedPair,
  NoSuchCircle,
  NoF,
  NoGH,
  NearDegenerate,
  ShapeMismatch,
  UnknownCircle,
  UnknownPreset,
};

const char* to_string(ErrorCode code);

/// Raised for precondition violations of the geometric operations.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace haga
