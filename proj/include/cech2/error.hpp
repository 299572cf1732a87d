#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cech2 {

enum class ErrorCode {
  NotSquare,
  EntryOutOfRange,
  NoIdentityAtZero,
  NotAssociative,
  MissingInverse,
  NotHomomorphism,
  NotAutomorphism,
  NotActionHom,
  EquivarianceViolation,
  PeifferViolation,
  NotAbelian,
  NotComposable,
  NotTwoGroup,
  IsoCheckFailed,
  VertexOutOfRange,
  EmptySimplex,
  UnknownSpace,
  UnknownGroup,
  TriangleViolation,
  TetrahedronViolation,
  NotACycle,
  DefectNotInKernel,
  ValuesNotInKernel,
  NotExact,
  BudgetExceeded,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code and a
/// message naming the offending witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cech2
