#include "cluster/error.hpp"

namespace cluster {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::InterpolationInconsistent: return "InterpolationInconsistent";
    case ErrorKind::PrimeCollision: return "PrimeCollision";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace cluster
