#pragma once

#include <stdexcept>
#include <string>

namespace ellroot {

enum class ErrorKind {
  InvalidParameter,
  Capacity,
  DivisionByZero,
  Domain,
  Pole,
  SingularCurve,
  Precondition,
  UnsupportedCharacteristic,
  Unsupported,
  InternalConsistency,
  FunctionalEquation,
  ConductorTooSmall,
  DegenerateEpsilon,
  Overflow,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ellroot
