#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace procat {

enum class ErrorKind {
  kInvalidArgument,
  kParseError,
  kPreconditionViolated,
  kNoLift,
  kNotDirected,
  kBudgetExhausted,
  kNotDominating,
  kShapeNotStronglyLoopless,
  kPreimageNotFound,
  kNotInvertible,
  kNoFactoringLevel,
  kInvariantFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace procat
