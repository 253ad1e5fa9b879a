#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beamtf {

enum class ErrorKind {
  DegenerateFrequency,    // |s| below the frequency floor
  RepeatedRoot,           // lambda1^2 == lambda2^2 within tolerance
  Overflow,               // |Re(lambda) x| beyond the exp guard
  NearSingular,           // s at or near an eigenvalue of the beam operator
  EmptyRange,             // no local maximum inside a peak search range
  SingularDiscretization, // finite-difference system could not be factored
  Parse,
  Validation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace beamtf
