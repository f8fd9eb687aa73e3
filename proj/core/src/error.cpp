#include "polycat/error.hpp"

namespace polycat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PlanarityViolation: return "PlanarityViolation";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OutOfBound: return "OutOfBound";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownPolymap: return "UnknownPolymap";
    case ErrorCode::NotAMonoid: return "NotAMonoid";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::UnknownOperation: return "UnknownOperation";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DimTooLarge: return "DimTooLarge";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InvariantError: return "InvariantError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace polycat
