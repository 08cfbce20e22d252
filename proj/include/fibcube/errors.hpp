#pragma once

#include <stdexcept>
#include <string>

namespace fibcube {

// Coarse failure category. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kContract,   // precondition violated by the caller
  kRange,      // integer argument outside the admissible range
  kOverflow,   // exact arithmetic would not fit
  kValidity,   // word is not a codeword of the requested family
  kResource,   // vertex / search budget exceeded
  kFormula,    // two routes to the same quantity disagree
  kUsage,      // unknown claim id, malformed range, ...
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ContractError : Error {
  explicit ContractError(const std::string& w) : Error(ErrorKind::kContract, w) {}
};
struct RangeError : Error {
  explicit RangeError(const std::string& w) : Error(ErrorKind::kRange, w) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& w) : Error(ErrorKind::kOverflow, w) {}
};
struct ValidityError : Error {
  explicit ValidityError(const std::string& w) : Error(ErrorKind::kValidity, w) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& w) : Error(ErrorKind::kResource, w) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorKind::kUsage, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::kIo, w) {}
};

// Raised when a constructive result and its closed-form count disagree.
// Carries both numbers so the verification harness can report them.
class FormulaViolation : public Error {
 public:
  FormulaViolation(const std::string& what, std::string constructed,
                   std::string closed_form)
      : Error(ErrorKind::kFormula, what),
        constructed_(std::move(constructed)),
        closed_form_(std::move(closed_form)) {}

  const std::string& constructed() const noexcept { return constructed_; }
  const std::string& closed_form() const noexcept { return closed_form_; }

 private:
  std::string constructed_;
  std::string closed_form_;
};

}  // namespace fibcube
