#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compalg {

/// Failure categories shared by every module. The CLI maps them onto
/// structured error objects, so names are stable identifiers.
enum class Errc {
  SpecMismatch,
  NotQuadExt,
  ZeroInput,
  ZeroDivisor,
  InvalidField,
  AlgebraMismatch,
  NotInvertible,
  DimensionMismatch,
  NotSquare,
  NotSplitForm,
  NotDiagonalBlock,
  UnexpectedZeroDivisor,
  SplitnessUndecided,
  PreconditionViolated,
  InfeasibleScale,
  InexactDivision,
  RankMismatch,
  OutOfRange,
  BranchUnavailable,
  BudgetExceeded,
  NotDividing,
  Unsupported,
  ShapeMismatch,
  TruncationTooSmall,
  SignatureMismatch,
  NotGradeOne,
  OutOfBudget,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace compalg
