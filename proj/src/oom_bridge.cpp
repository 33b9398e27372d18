#include "kappa/oom_bridge.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "kappa/disbelief.hpp"

namespace kappa {
namespace {

constexpr double kBoundaryTolerance = 1e-12;

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

EpsilonBase::EpsilonBase(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 1.0) || !std::isfinite(epsilon)) {
    throw Error(Errc::InvalidEpsilon, "epsilon must be a finite real > 1, got " + num(epsilon));
  }
}

ExtNat kappa_of(double p, EpsilonBase eps) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::OutOfRange, "probability " + num(p) + " is outside [0, 1]");
  }
  if (p == 0.0) return INF;
  const double e = eps.value();
  auto k = static_cast<std::int64_t>(std::floor(-std::log(p) / std::log(e)));
  if (k < 0) k = 0;
  // The log can land on the wrong side of an interval boundary; settle k
  // against the powers themselves so that p in (e^-(k+1), e^-k] gives k.
  const auto upper = [&](std::int64_t j) { return std::pow(e, -static_cast<double>(j)); };
  for (int guard = 0; guard < 4; ++guard) {
    if (k > 0 && p > upper(k) * (1.0 + kBoundaryTolerance)) {
      --k;
    } else if (p <= upper(k + 1) * (1.0 + kBoundaryTolerance)) {
      ++k;
    } else {
      break;
    }
  }
  return ExtNat(k);
}

ProbLottery ProbLottery::make(PrizeSet prizes, std::vector<double> probs,
                              std::vector<double> utils) {
  if (probs.size() != prizes.size() || utils.size() != prizes.size()) {
    throw Error(Errc::LengthMismatch, "probs and utils need one entry per prize");
  }
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(Errc::InvalidProbLottery, "probability " + num(p) + " is outside [0, 1]");
    }
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(Errc::InvalidProbLottery, "probabilities sum to " + num(total));
  }
  for (double u : utils) {
    if (!(u >= 0.0 && u <= 1.0)) {
      throw Error(Errc::InvalidProbLottery, "utility " + num(u) + " is outside [0, 1]");
    }
  }
  if (utils.front() != 1.0 || utils.back() != 0.0) {
    throw Error(Errc::InvalidProbLottery,
                "utilities must run from 1 at the best prize to 0 at the worst");
  }
  for (std::size_t i = 1; i < utils.size(); ++i) {
    if (utils[i] > utils[i - 1]) {
      throw Error(Errc::InvalidProbLottery,
                  "utility of " + prizes[i] + " exceeds that of " + prizes[i - 1]);
    }
  }
  return ProbLottery(std::move(prizes), std::move(probs), std::move(utils));
}

SimpleLottery spohnian_from_prob(const ProbLottery& lottery, EpsilonBase eps) {
  std::vector<ExtNat> raw;
  raw.reserve(lottery.probs().size());
  for (double p : lottery.probs()) raw.push_back(kappa_of(p, eps));
  return SimpleLottery::make(lottery.prizes(), normalize(raw));
}

double vnm_eu(const ProbLottery& lottery) {
  double eu = 0.0;
  for (std::size_t i = 0; i < lottery.probs().size(); ++i) {
    eu += lottery.probs()[i] * lottery.utils()[i];
  }
  return eu;
}

AgreementReport order_agreement(const ProbLottery& lottery, EpsilonBase eps) {
  AgreementReport report;
  report.kappa_of_eu = kappa_of(std::min(vnm_eu(lottery), 1.0), eps);
  report.qualitative_eu = INF;
  for (std::size_t i = 0; i < lottery.probs().size(); ++i) {
    const double u = lottery.utils()[i];
    if (u == 0.0) continue;
    report.qualitative_eu =
        std::min(report.qualitative_eu, kappa_of(lottery.probs()[i], eps) + kappa_of(u, eps));
  }
  if (report.kappa_of_eu.is_inf() || report.qualitative_eu.is_inf()) {
    if (report.kappa_of_eu != report.qualitative_eu) {
      throw Error(Errc::InvariantBreach, "exactly one side of the agreement check is INF");
    }
    report.gap = 0;
  } else {
    report.gap = ExtInt::difference(report.kappa_of_eu, report.qualitative_eu).value();
  }
  return report;
}

std::int64_t agreement_gap_bound(std::size_t prizes, EpsilonBase eps) {
  std::int64_t levels = 0;
  double reach = 1.0;
  while (reach < static_cast<double>(prizes)) {
    reach *= eps.value();
    ++levels;
  }
  return levels + 1;
}

}  // namespace kappa
