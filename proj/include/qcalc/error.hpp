#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

enum class ErrorKind {
  DivisionByZero,
  Pole,
  NeedsSquareRoot,
  OutOfRange,
  Unsupported,
  InvalidArgument,
  Parse,
  Internal,
};

/// Error raised by every qcalc operation; `kind()` identifies the failure class.
class QError : public std::runtime_error {
 public:
  QError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcalc
