#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prmqc {

enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  UnsupportedFieldSize,
  ZeroInverse,
  FieldMismatch,
  InvalidSubfieldSize,
  NotASubfield,
  DegreeTooSmall,
  IndexOutOfRange,
  ShapeMismatch,
  NotAQuadraticExtension,
  NotFullWeight,
  BudgetExceeded,
  EmptyCode,
  TargetOutOfRange,
  BinaryFieldUnsupported,
  SweepExhausted,
  VectorNotOrthogonal,
  DegreeOutOfRange,
  PreconditionViolated,
  ContainmentFailed,
  ParityMismatch,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace prmqc
