#pragma once

#include <stdexcept>
#include <string>

namespace ikit {

/// Base of all domain errors. `name()` is the stable machine-readable error
/// name printed by the CLI; `exit_code()` is the process exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what, int exit_code = 6)
      : std::runtime_error(what), name_(std::move(name)), exit_code_(exit_code) {}

  const std::string& name() const noexcept { return name_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string name_;
  int exit_code_;
};

#define IKIT_DEFINE_ERROR(Type, code)                                   \
  class Type : public Error {                                          \
   public:                                                             \
    explicit Type(const std::string& what) : Error(#Type, what, code) {} \
  };

IKIT_DEFINE_ERROR(ParseError, 2)
IKIT_DEFINE_ERROR(ModularCase, 3)
IKIT_DEFINE_ERROR(CapExceeded, 4)
IKIT_DEFINE_ERROR(TruncationInsufficient, 5)
IKIT_DEFINE_ERROR(MaxDegreeExceeded, 5)
IKIT_DEFINE_ERROR(DivisionByZero, 6)
IKIT_DEFINE_ERROR(FieldMismatch, 6)
IKIT_DEFINE_ERROR(ContextMismatch, 6)
IKIT_DEFINE_ERROR(ZeroPolynomial, 6)
IKIT_DEFINE_ERROR(SingularMatrix, 6)
IKIT_DEFINE_ERROR(LengthMismatch, 6)
IKIT_DEFINE_ERROR(TruncatedBasis, 6)
IKIT_DEFINE_ERROR(SingularGenerator, 6)
IKIT_DEFINE_ERROR(NotHInvariant, 6)
IKIT_DEFINE_ERROR(NotASubgroup, 6)
IKIT_DEFINE_ERROR(PositiveCharacteristic, 6)
IKIT_DEFINE_ERROR(FieldTooSmall, 6)
IKIT_DEFINE_ERROR(RetryLimitExceeded, 6)
IKIT_DEFINE_ERROR(NonHomogeneousInput, 6)
IKIT_DEFINE_ERROR(NotDeclaredReductive, 6)
IKIT_DEFINE_ERROR(InvalidSpec, 6)

#undef IKIT_DEFINE_ERROR

}  // namespace ikit
