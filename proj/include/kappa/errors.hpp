#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kappa {

/// Failure categories reported by every module of the library.
enum class Errc {
  Overflow,
  LengthMismatch,
  NotNormalized,
  AllInfinite,
  EmptyFrame,
  DuplicateLabel,
  UnknownWorld,
  IncompleteGrouping,
  ConditionOnDisbelievedCertainty,
  FrameMismatch,
  TooFewPrizes,
  UnknownPrize,
  EmptyBranches,
  PrizeSetMismatch,
  NotInB0,
  EmptyList,
  UnassessedPrize,
  InvalidAssessment,
  UnknownAct,
  InvalidProblem,
  OutOfRange,
  InvalidProbLottery,
  InvalidEpsilon,
  InvariantBreach,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kappa
