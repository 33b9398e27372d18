#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kappa/ext_num.hpp"
#include "kappa/lottery.hpp"

namespace kappa {

/// Pair of disbelief degrees (toward the best prize, toward the worst prize)
/// with no normalization constraint. Intermediate results of the utility
/// recursion live here.
struct UtilityVector {
  ExtNat first;
  ExtNat second;

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
};

/// Point of the qualitative utility scale: a pair with min(first, second) == 0,
/// read as the standard lottery [best.first, worst.second].
class UtilityValue {
 public:
  /// Throws NotInB0.
  static UtilityValue make(ExtNat first, ExtNat second);
  /// Empty unless min(first, second) == 0.
  static std::optional<UtilityValue> from_vector(const UtilityVector& v);

  /// (0, INF): the best prize for certain.
  static UtilityValue best() { return UtilityValue(0, INF); }
  /// (INF, 0): the worst prize for certain.
  static UtilityValue worst() { return UtilityValue(INF, 0); }

  ExtNat first() const noexcept { return first_; }
  ExtNat second() const noexcept { return second_; }
  UtilityVector vector() const noexcept { return {first_, second_}; }

  /// "(1, 0)"
  std::string to_string() const;

  friend bool operator==(const UtilityValue&, const UtilityValue&) = default;

 private:
  UtilityValue(ExtNat first, ExtNat second) : first_(first), second_(second) {}

  ExtNat first_;
  ExtNat second_;
};

/// second - first; (0, INF) is +INF and (INF, 0) is -INF.
ExtInt scalar_utility(const UtilityValue& v);

/// (first + c, second + c), saturating at INF.
UtilityVector add_scalar(ExtNat c, const UtilityVector& v);

/// Componentwise minimum. Throws EmptyList.
UtilityVector min_vectors(std::span<const UtilityVector> vs);

/// Preference between standard lotteries by the three monotonicity cases:
/// both certain of not-worst and s has the larger second; only s has
/// first == 0; or both have second == 0 and s has the smaller first.
std::strong_ordering compare_standard(const UtilityValue& s, const UtilityValue& t);

/// Standard lottery indifferent to each prize.
///
/// The best prize must map to (0, INF), the worst to (INF, 0), and scalar
/// utilities must strictly decrease along the preference order.
class PrizeAssessment {
 public:
  /// Throws LengthMismatch or InvalidAssessment.
  static PrizeAssessment make(PrizeSet prizes, std::vector<UtilityValue> values);
  /// Throws UnassessedPrize, UnknownPrize or InvalidAssessment.
  static PrizeAssessment make(PrizeSet prizes,
                              const std::map<std::string, UtilityValue>& values);

  const PrizeSet& prizes() const noexcept { return prizes_; }
  std::span<const UtilityValue> values() const noexcept { return values_; }
  const UtilityValue& of(std::size_t index) const { return values_.at(index); }
  /// Throws UnassessedPrize.
  const UtilityValue& of(std::string_view prize) const;

  friend bool operator==(const PrizeAssessment&, const PrizeAssessment&) = default;

 private:
  PrizeAssessment(PrizeSet prizes, std::vector<UtilityValue> values)
      : prizes_(std::move(prizes)), values_(std::move(values)) {}

  PrizeSet prizes_;
  std::vector<UtilityValue> values_;
};

/// Qualitative expected utility computed directly on the tree:
/// a leaf takes its assessment, a node the minimum over branches of
/// delta_i + U(child_i). Prizes are matched to the assessment by label.
/// Throws UnassessedPrize.
UtilityValue evaluate(const Lottery& lottery, const PrizeAssessment& assessment);
UtilityValue evaluate(const SimpleLottery& lottery, const PrizeAssessment& assessment);

/// The unique standard lottery [best.k1, worst.kr] indifferent to `lottery`,
/// over the two-prize set {best, worst} of the assessment.
SimpleLottery standard_equivalent(const Lottery& lottery, const PrizeAssessment& assessment);

}  // namespace kappa
