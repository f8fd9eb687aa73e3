#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycat {

enum class ErrorCode {
  PlanarityViolation,
  TypeMismatch,
  IndexOutOfRange,
  OutOfBound,
  UnknownObject,
  UnknownPolymap,
  NotAMonoid,
  NotCommutative,
  UnknownType,
  UnknownOperation,
  MalformedTree,
  NotSpanning,
  DimMismatch,
  DimTooLarge,
  Degenerate,
  BoundaryMismatch,
  InvariantError,
  SyntaxError,
  SchemaError,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace polycat
