#include "procat/error.hpp"

namespace procat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kNoLift: return "NoLift";
    case ErrorKind::kNotDirected: return "NotDirected";
    case ErrorKind::kBudgetExhausted: return "BudgetExhausted";
    case ErrorKind::kNotDominating: return "NotDominating";
    case ErrorKind::kShapeNotStronglyLoopless: return "ShapeNotStronglyLoopless";
    case ErrorKind::kPreimageNotFound: return "PreimageNotFound";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kNoFactoringLevel: return "NoFactoringLevel";
    case ErrorKind::kInvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace procat
