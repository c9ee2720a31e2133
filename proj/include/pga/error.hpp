#pragma once

#include <stdexcept>
#include <string>

namespace pga {

enum class ErrorKind {
  InvalidOrder,
  NotAGroup,
  Layout,
  Bounds,
  Argument,
  UnresolvedLabel,
  Schema,
  Io,
  Validation,
  InvalidGlobalAction,
  TheoremViolation,
  Resource,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace pga
