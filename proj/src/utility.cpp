#include "kappa/utility.hpp"

#include <algorithm>

namespace kappa {

UtilityValue UtilityValue::make(ExtNat first, ExtNat second) {
  if (auto v = from_vector({first, second})) return *v;
  throw Error(Errc::NotInB0, "(" + first.to_string() + ", " + second.to_string() +
                                 ") has no zero component");
}

std::optional<UtilityValue> UtilityValue::from_vector(const UtilityVector& v) {
  if (std::min(v.first, v.second) != ExtNat{0}) return std::nullopt;
  return UtilityValue(v.first, v.second);
}

std::string UtilityValue::to_string() const {
  return "(" + first_.to_string() + ", " + second_.to_string() + ")";
}

ExtInt scalar_utility(const UtilityValue& v) {
  return ExtInt::difference(v.second(), v.first());
}

UtilityVector add_scalar(ExtNat c, const UtilityVector& v) {
  return {v.first + c, v.second + c};
}

UtilityVector min_vectors(std::span<const UtilityVector> vs) {
  if (vs.empty()) throw Error(Errc::EmptyList, "min over no utility vectors");
  UtilityVector out = vs.front();
  for (const auto& v : vs.subspan(1)) {
    out.first = std::min(out.first, v.first);
    out.second = std::min(out.second, v.second);
  }
  return out;
}

namespace {

bool strictly_preferred(const UtilityValue& s, const UtilityValue& t) {
  const ExtNat zero = 0;
  if (s.first() == zero && t.first() == zero && s.second() > t.second()) return true;
  if (s.first() == zero && t.first() > zero) return true;
  // The printed third case names the second component of a two-prize
  // lottery; read as the worst-prize degree.
  return s.first() < t.first() && s.second() == zero && t.second() == zero;
}

}  // namespace

std::strong_ordering compare_standard(const UtilityValue& s, const UtilityValue& t) {
  if (strictly_preferred(s, t)) return std::strong_ordering::greater;
  if (strictly_preferred(t, s)) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

PrizeAssessment PrizeAssessment::make(PrizeSet prizes, std::vector<UtilityValue> values) {
  if (values.size() != prizes.size()) {
    throw Error(Errc::LengthMismatch,
                "assessment has " + std::to_string(values.size()) + " values for " +
                    std::to_string(prizes.size()) + " prizes");
  }
  if (values.front() != UtilityValue::best()) {
    throw Error(Errc::InvalidAssessment,
                "assessment: " + prizes.best() + " must map to (0,inf)");
  }
  if (values.back() != UtilityValue::worst()) {
    throw Error(Errc::InvalidAssessment,
                "assessment: " + prizes.worst() + " must map to (inf,0)");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (scalar_utility(values[i]) >= scalar_utility(values[i - 1])) {
      throw Error(Errc::InvalidAssessment,
                  "assessment: " + prizes[i] + " " + values[i].to_string() +
                      " is not strictly worse than " + prizes[i - 1] + " " +
                      values[i - 1].to_string());
    }
  }
  return PrizeAssessment(std::move(prizes), std::move(values));
}

PrizeAssessment PrizeAssessment::make(PrizeSet prizes,
                                      const std::map<std::string, UtilityValue>& values) {
  for (const auto& [prize, value] : values) prizes.index_of(prize);
  std::vector<UtilityValue> ordered;
  ordered.reserve(prizes.size());
  for (const auto& prize : prizes.labels()) {
    const auto it = values.find(prize);
    if (it == values.end()) {
      throw Error(Errc::UnassessedPrize, "prize '" + prize + "' has no assessment");
    }
    ordered.push_back(it->second);
  }
  return make(std::move(prizes), std::move(ordered));
}

const UtilityValue& PrizeAssessment::of(std::string_view prize) const {
  if (!prizes_.contains(prize)) {
    throw Error(Errc::UnassessedPrize,
                "prize '" + std::string(prize) + "' has no assessment");
  }
  return values_[prizes_.index_of(prize)];
}

namespace {

UtilityVector evaluate_vector(const Lottery& lottery, const PrizeAssessment& assessment,
                              std::span<const std::size_t> slot) {
  if (lottery.is_leaf()) return assessment.of(slot[lottery.prize()]).vector();
  std::vector<UtilityVector> terms;
  terms.reserve(lottery.branches().size());
  for (const auto& b : lottery.branches()) {
    terms.push_back(add_scalar(b.delta, evaluate_vector(b.child, assessment, slot)));
  }
  return min_vectors(terms);
}

// Assessment index for every prize of the lottery's prize set.
std::vector<std::size_t> assessment_slots(const PrizeSet& prizes,
                                          const PrizeAssessment& assessment) {
  std::vector<std::size_t> slot(prizes.size());
  if (prizes == assessment.prizes()) {
    for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = i;
    return slot;
  }
  for (std::size_t i = 0; i < slot.size(); ++i) {
    if (!assessment.prizes().contains(prizes[i])) {
      throw Error(Errc::UnassessedPrize, "prize '" + prizes[i] + "' has no assessment");
    }
    slot[i] = assessment.prizes().index_of(prizes[i]);
  }
  return slot;
}

UtilityValue checked_b0(const UtilityVector& v) {
  if (auto u = UtilityValue::from_vector(v)) return *u;
  throw Error(Errc::InvariantBreach, "qualitative utility left B0");
}

}  // namespace

UtilityValue evaluate(const Lottery& lottery, const PrizeAssessment& assessment) {
  const auto slot = assessment_slots(lottery.prizes(), assessment);
  return checked_b0(evaluate_vector(lottery, assessment, slot));
}

UtilityValue evaluate(const SimpleLottery& lottery, const PrizeAssessment& assessment) {
  const auto slot = assessment_slots(lottery.prizes(), assessment);
  std::vector<UtilityVector> terms;
  terms.reserve(slot.size());
  for (std::size_t i = 0; i < slot.size(); ++i) {
    terms.push_back(add_scalar(lottery[i], assessment.of(slot[i]).vector()));
  }
  return checked_b0(min_vectors(terms));
}

SimpleLottery standard_equivalent(const Lottery& lottery, const PrizeAssessment& assessment) {
  const UtilityValue u = evaluate(lottery, assessment);
  const PrizeSet& prizes = assessment.prizes();
  return SimpleLottery::make(PrizeSet({prizes.best(), prizes.worst()}),
                             {u.first(), u.second()});
}

}  // namespace kappa
