#include "compalg/error.hpp"

namespace compalg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotQuadExt: return "NotQuadExt";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::InvalidField: return "InvalidField";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSplitForm: return "NotSplitForm";
    case Errc::NotDiagonalBlock: return "NotDiagonalBlock";
    case Errc::UnexpectedZeroDivisor: return "UnexpectedZeroDivisor";
    case Errc::SplitnessUndecided: return "SplitnessUndecided";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InfeasibleScale: return "InfeasibleScale";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BranchUnavailable: return "BranchUnavailable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotDividing: return "NotDividing";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NotGradeOne: return "NotGradeOne";
    case Errc::OutOfBudget: return "OutOfBudget";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace compalg
