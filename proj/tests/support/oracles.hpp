#pragma once

// Reference computations that avoid the library's recursive code paths.

#include <cstdint>
#include <functional>
#include <vector>

#include "kappa/lottery.hpp"
#include "kappa/utility.hpp"

namespace kappa::testing {

/// Reduction by collapsing the whole tree at once: every root-to-leaf path is
/// a combined state whose degree is the sum of the deltas along it, and a
/// prize gets the minimum over the paths ending in it.
inline std::vector<ExtNat> reduce_by_paths(const Lottery& lottery) {
  std::vector<ExtNat> out(lottery.prizes().size(), INF);
  std::function<void(const Lottery&, ExtNat)> walk = [&](const Lottery& l, ExtNat along) {
    if (l.is_leaf()) {
      out[l.prize()] = std::min(out[l.prize()], along);
      return;
    }
    for (const auto& b : l.branches()) walk(b.child, along + b.delta);
  };
  walk(lottery, 0);
  return out;
}

/// Utility from a reduced vector: k1 = min_j(kappa_j + a_j.first) and
/// kr = min_j(kappa_j + a_j.second), computed on raw components.
inline std::pair<ExtNat, ExtNat> utility_of_reduced(const std::vector<ExtNat>& kappa,
                                                    const PrizeAssessment& assessment) {
  ExtNat k1 = INF;
  ExtNat kr = INF;
  for (std::size_t j = 0; j < kappa.size(); ++j) {
    k1 = std::min(k1, kappa[j] + assessment.of(j).first());
    kr = std::min(kr, kappa[j] + assessment.of(j).second());
  }
  return {k1, kr};
}

/// Scalar order of a B0 pair, read off the components without ExtInt.
/// Returns -1, 0 or 1 for s below, equal to, or above t.
inline int scalar_order(const UtilityValue& s, const UtilityValue& t) {
  // Map to a signed key: (0, y) -> y, (x, 0) -> -x, with infinities at the ends.
  auto key = [](const UtilityValue& v) -> long double {
    if (v.second().is_inf()) return 1e30L;
    if (v.first().is_inf()) return -1e30L;
    return static_cast<long double>(v.second().value()) -
           static_cast<long double>(v.first().value());
  };
  const auto a = key(s);
  const auto b = key(t);
  return a < b ? -1 : (a > b ? 1 : 0);
}

/// kappa of m / 10^d by integer comparison: the k with
/// 10^(d-k-1) < m <= 10^(d-k). Requires 1 <= m <= 10^d and d <= 18.
inline std::uint64_t decimal_kappa(std::uint64_t m, unsigned d) {
  std::uint64_t k = 0;
  std::uint64_t bound = 1;  // 10^(d-k) as k counts down from d
  for (unsigned i = 0; i < d; ++i) bound *= 10;
  while (k < d && m <= bound / 10) {
    bound /= 10;
    ++k;
  }
  return k;
}

}  // namespace kappa::testing
