#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kappa/ext_num.hpp"
#include "kappa/lottery.hpp"

namespace kappa {

/// Base of the order-of-magnitude reading of probabilities. Must exceed 1.
class EpsilonBase {
 public:
  /// Throws InvalidEpsilon.
  explicit EpsilonBase(double epsilon = 10.0);

  double value() const noexcept { return epsilon_; }

  friend bool operator==(const EpsilonBase&, const EpsilonBase&) = default;

 private:
  double epsilon_;
};

/// floor(-log_eps(p)): the number of leading zeros of p written in base eps.
/// p == 0 maps to INF. An exact power eps^-k maps to k, within a relative
/// tolerance of 1e-12 at the interval boundaries. Throws OutOfRange unless
/// 0 <= p <= 1.
ExtNat kappa_of(double p, EpsilonBase eps = EpsilonBase{});

/// Probabilistic lottery over a prize set, with normalized prize utilities.
class ProbLottery {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Probabilities must be non-negative and sum to 1 (within kSumTolerance);
  /// utilities lie in [0, 1], weakly decrease, and run from 1 down to 0.
  /// Throws LengthMismatch or InvalidProbLottery.
  static ProbLottery make(PrizeSet prizes, std::vector<double> probs,
                          std::vector<double> utils);

  const PrizeSet& prizes() const noexcept { return prizes_; }
  std::span<const double> probs() const noexcept { return probs_; }
  std::span<const double> utils() const noexcept { return utils_; }

  friend bool operator==(const ProbLottery&, const ProbLottery&) = default;

 private:
  ProbLottery(PrizeSet prizes, std::vector<double> probs, std::vector<double> utils)
      : prizes_(std::move(prizes)), probs_(std::move(probs)), utils_(std::move(utils)) {}

  PrizeSet prizes_;
  std::vector<double> probs_;
  std::vector<double> utils_;
};

/// kappa_of for each probability, then normalized (the floor can leave every
/// entry positive).
SimpleLottery spohnian_from_prob(const ProbLottery& lottery, EpsilonBase eps = EpsilonBase{});

/// Sum of p_i * u(o_i).
double vnm_eu(const ProbLottery& lottery);

struct AgreementReport {
  ExtNat kappa_of_eu;     ///< kappa of the quantitative expected utility
  ExtNat qualitative_eu;  ///< min over terms of kappa(p_i) + kappa(u_i)
  std::int64_t gap = 0;   ///< kappa_of_eu - qualitative_eu; 0 when both are INF

  friend bool operator==(const AgreementReport&, const AgreementReport&) = default;
};

/// Compares the order of magnitude of the expected utility with the min-plus
/// expected utility of the order-of-magnitude terms. Terms with p_i == 0 or
/// u_i == 0 contribute INF to the minimum, matching their zero contribution
/// to the sum.
AgreementReport order_agreement(const ProbLottery& lottery, EpsilonBase eps = EpsilonBase{});

/// ceil(log_eps(r)) + 1, the largest |gap| floor effects allow for r prizes.
std::int64_t agreement_gap_bound(std::size_t prizes, EpsilonBase eps = EpsilonBase{});

}  // namespace kappa
