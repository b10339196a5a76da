#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

// Base of every error thrown by the engine. `kind()` is the stable name used
// in CLI diagnostics and JSON error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }
  // Validation errors are caused by bad input (CLI exit code 2); everything
  // else is a computational failure (exit code 1).
  virtual bool is_validation() const noexcept { return false; }

 private:
  std::string kind_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  bool is_validation() const noexcept override { return true; }
};

#define HFK_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                           \
   public:                                                             \
    explicit Name(const std::string& what) : Base(#Name, what) {}      \
  };

HFK_DEFINE_ERROR(MalformedWord, ValidationError)
HFK_DEFINE_ERROR(NotAKnot, ValidationError)
HFK_DEFINE_ERROR(InapplicableMove, ValidationError)
HFK_DEFINE_ERROR(UsageError, ValidationError)

HFK_DEFINE_ERROR(DivideByZero, Error)
HFK_DEFINE_ERROR(DegreeCapExceeded, Error)
HFK_DEFINE_ERROR(InfiniteDimensional, Error)
HFK_DEFINE_ERROR(SubsetCapExceeded, Error)
HFK_DEFINE_ERROR(DifferentialNotSquareZero, Error)
HFK_DEFINE_ERROR(GradingViolation, Error)

#undef HFK_DEFINE_ERROR

}  // namespace hfk
