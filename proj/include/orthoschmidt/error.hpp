#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthoschmidt {

enum class ErrorCode {
  ZeroVector,
  NotNormalized,
  NonFinite,
  NotUnitary,
  NotDiagonal,
  Diagonal,
  ZeroParameter,
  GammaOutOfRange,
  DegenerateParameters,
  ConditionViolated,
  AccidentallyDiagonal,
  NotOrthonormalBasis,
  NotPPP,
  COutOfRange,
  NotOrthogonal,
  BadWeights,
  InvalidDensity,
  UnknownType,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every public operation of the library.
///
/// `code()` identifies the failure class; `detail()` carries an optional
/// sub-classification (e.g. which condition a constructor parameter set
/// violated: "normal", "entangled" or "diagonal").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace orthoschmidt
