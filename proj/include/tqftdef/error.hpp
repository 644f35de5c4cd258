#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqftdef {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  DimensionMismatch,
  UnknownEquationId,
  NotProjectivelySpecial,
  ZeroLoopConstant,
  InvalidSystem,
  InvalidSurface,
  OrientationContradiction,
  UnknownSeed,
  NoSuchSimplex,
  NotFlippable,
  NotMergeable,
  NotSplittable,
  TooLarge,
  OutOfMemoryBudget,
  InvalidGroupTable,
  InvalidActionTable,
  ZeroCocycleValue,
  SizeOutOfRange,
  InvalidModule,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// C API maps them onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tqftdef
