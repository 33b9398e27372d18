#include "kappa/errors.hpp"

namespace kappa {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Overflow: return "Overflow";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::AllInfinite: return "AllInfinite";
    case Errc::EmptyFrame: return "EmptyFrame";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownWorld: return "UnknownWorld";
    case Errc::IncompleteGrouping: return "IncompleteGrouping";
    case Errc::ConditionOnDisbelievedCertainty:
      return "ConditionOnDisbelievedCertainty";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::TooFewPrizes: return "TooFewPrizes";
    case Errc::UnknownPrize: return "UnknownPrize";
    case Errc::EmptyBranches: return "EmptyBranches";
    case Errc::PrizeSetMismatch: return "PrizeSetMismatch";
    case Errc::NotInB0: return "NotInB0";
    case Errc::EmptyList: return "EmptyList";
    case Errc::UnassessedPrize: return "UnassessedPrize";
    case Errc::InvalidAssessment: return "InvalidAssessment";
    case Errc::UnknownAct: return "UnknownAct";
    case Errc::InvalidProblem: return "InvalidProblem";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidProbLottery: return "InvalidProbLottery";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace kappa
