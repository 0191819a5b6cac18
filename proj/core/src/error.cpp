#include "ellroot/error.hpp"

namespace ellroot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::SingularCurve: return "singular curve";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::UnsupportedCharacteristic: return "unsupported characteristic";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InternalConsistency: return "internal consistency";
    case ErrorKind::FunctionalEquation: return "functional equation failure";
    case ErrorKind::ConductorTooSmall: return "conductor too small";
    case ErrorKind::DegenerateEpsilon: return "degenerate epsilon factor";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

}  // namespace ellroot
