#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cluster {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  ZeroDivisor,
  NotDivisible,
  PositivityViolation,
  InterpolationInconsistent,
  PrimeCollision,
  PreconditionViolated,
  InternalError,
};

std::string_view error_name(ErrorKind kind);

// Every failure raised by the library carries a kind whose name is what the
// CLI and the service report to the outside world.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace cluster
