#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/disbelief.hpp"
#include "kappa/lottery.hpp"
#include "kappa/utility.hpp"

namespace kappa {

/// Finite acts over finite states, each (act, state) pair yielding a prize,
/// with a disbelief function over the states and an assessment of the prizes.
class DecisionProblem {
 public:
  /// `outcomes[a][s]` is the prize of act a in state s.
  /// Throws InvalidProblem, UnknownPrize or FrameMismatch.
  static DecisionProblem make(std::vector<std::string> acts,
                              const std::vector<std::vector<std::string>>& outcomes,
                              DisbeliefFunction belief, PrizeAssessment assessment);

  const Frame& states() const noexcept { return belief_.frame(); }
  std::span<const std::string> acts() const noexcept { return acts_; }
  const DisbeliefFunction& belief() const noexcept { return belief_; }
  const PrizeAssessment& assessment() const noexcept { return assessment_; }
  const PrizeSet& prizes() const noexcept { return assessment_.prizes(); }

  /// Throws UnknownAct.
  std::size_t act_index(std::string_view act) const;
  /// Prize index reached by act `act` in state `state`.
  std::size_t outcome(std::size_t act, std::size_t state) const {
    return outcomes_.at(act).at(state);
  }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

 private:
  DecisionProblem(std::vector<std::string> acts,
                  std::vector<std::vector<std::size_t>> outcomes,
                  DisbeliefFunction belief, PrizeAssessment assessment)
      : acts_(std::move(acts)),
        outcomes_(std::move(outcomes)),
        belief_(std::move(belief)),
        assessment_(std::move(assessment)) {}

  std::vector<std::string> acts_;
  std::vector<std::vector<std::size_t>> outcomes_;
  DisbeliefFunction belief_;
  PrizeAssessment assessment_;
};

/// Disbelief in each prize under `act`: the minimum belief rank over the
/// states that yield it, INF if no state does. Throws UnknownAct.
SimpleLottery act_lottery(const DecisionProblem& problem, std::string_view act);

struct RankedAct {
  std::string act;
  UtilityValue utility;
};

/// Acts by descending scalar qualitative expected utility; ties keep input order.
std::vector<RankedAct> rank_acts(const DecisionProblem& problem);

struct MaximinEntry {
  std::string act;
  std::size_t worst;  ///< index of the worst prize with finite disbelief
};

/// Acts by their worst reachable prize, best worst-case first; ties keep
/// input order. Prizes disbelieved with certainty are unreachable.
std::vector<MaximinEntry> maximin_rank(const DecisionProblem& problem);

/// True when the two rules pick different top acts and each strictly prefers
/// its own pick: the qualitative top has strictly higher utility than the
/// maximin top, and the maximin top has a strictly better worst prize.
bool rules_disagree(const DecisionProblem& problem);

/// Builds a problem whose acts induce exactly the given lotteries. States are
/// the joint outcomes with finite rank, ranked by the sum of the per-act
/// degrees, so the acts are mutually independent.
DecisionProblem problem_from_act_lotteries(std::vector<std::string> acts,
                                           std::span<const SimpleLottery> lotteries,
                                           const PrizeAssessment& assessment);

struct SearchBounds {
  std::size_t max_prizes = 3;
  std::uint64_t max_delta = 5;
  std::size_t acts = 2;
  /// Stop after this many candidate problems when set.
  std::optional<std::uint64_t> max_candidates;
};

/// Exhaustive search for a problem where qualitative expected utility and
/// maximin disagree. Enumerates, in canonical order, prize counts 2..max_prizes,
/// act counts 2..acts, every strictly monotone assessment whose finite
/// components are at most max_delta, and every tuple of act lotteries with
/// deltas in {0..max_delta, INF}. Returns the first witness.
std::optional<DecisionProblem> find_maximin_disagreement(const SearchBounds& bounds);

}  // namespace kappa
