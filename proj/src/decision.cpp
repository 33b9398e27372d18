#include "kappa/decision.hpp"

#include <algorithm>
#include <set>

namespace kappa {

DecisionProblem DecisionProblem::make(std::vector<std::string> acts,
                                      const std::vector<std::vector<std::string>>& outcomes,
                                      DisbeliefFunction belief, PrizeAssessment assessment) {
  if (acts.empty()) throw Error(Errc::InvalidProblem, "decision problem has no acts");
  std::set<std::string, std::less<>> seen;
  for (const auto& act : acts) {
    if (!seen.insert(act).second) {
      throw Error(Errc::InvalidProblem, "duplicate act '" + act + "'");
    }
  }
  if (outcomes.size() != acts.size()) {
    throw Error(Errc::InvalidProblem, "outcome table has " + std::to_string(outcomes.size()) +
                                          " rows for " + std::to_string(acts.size()) + " acts");
  }
  const std::size_t n_states = belief.frame().size();
  const PrizeSet& prizes = assessment.prizes();
  std::vector<std::vector<std::size_t>> table(acts.size());
  for (std::size_t a = 0; a < acts.size(); ++a) {
    if (outcomes[a].size() != n_states) {
      throw Error(Errc::InvalidProblem, "act '" + acts[a] + "' has " +
                                            std::to_string(outcomes[a].size()) +
                                            " outcomes for " + std::to_string(n_states) +
                                            " states");
    }
    table[a].reserve(n_states);
    for (const auto& prize : outcomes[a]) table[a].push_back(prizes.index_of(prize));
  }
  return DecisionProblem(std::move(acts), std::move(table), std::move(belief),
                         std::move(assessment));
}

std::size_t DecisionProblem::act_index(std::string_view act) const {
  const auto it = std::find(acts_.begin(), acts_.end(), act);
  if (it == acts_.end()) {
    throw Error(Errc::UnknownAct, "unknown act '" + std::string(act) + "'");
  }
  return static_cast<std::size_t>(it - acts_.begin());
}

namespace {

std::vector<ExtNat> act_deltas(const DecisionProblem& problem, std::size_t act) {
  std::vector<ExtNat> deltas(problem.prizes().size(), INF);
  for (std::size_t s = 0; s < problem.states().size(); ++s) {
    auto& slot = deltas[problem.outcome(act, s)];
    slot = std::min(slot, problem.belief()[s]);
  }
  return deltas;
}

std::size_t worst_reachable(std::span<const ExtNat> deltas) {
  for (std::size_t j = deltas.size(); j-- > 0;) {
    if (deltas[j].is_finite()) return j;
  }
  throw Error(Errc::InvariantBreach, "act reaches no prize");
}

}  // namespace

SimpleLottery act_lottery(const DecisionProblem& problem, std::string_view act) {
  return SimpleLottery::make(problem.prizes(), act_deltas(problem, problem.act_index(act)));
}

std::vector<RankedAct> rank_acts(const DecisionProblem& problem) {
  std::vector<RankedAct> ranked;
  for (const auto& act : problem.acts()) {
    const UtilityValue u = evaluate(act_lottery(problem, act), problem.assessment());
    ranked.push_back({act, u});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedAct& a, const RankedAct& b) {
    return scalar_utility(a.utility) > scalar_utility(b.utility);
  });
  return ranked;
}

std::vector<MaximinEntry> maximin_rank(const DecisionProblem& problem) {
  std::vector<MaximinEntry> ranked;
  for (std::size_t a = 0; a < problem.acts().size(); ++a) {
    ranked.push_back({problem.acts()[a], worst_reachable(act_deltas(problem, a))});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const MaximinEntry& a, const MaximinEntry& b) { return a.worst < b.worst; });
  return ranked;
}

bool rules_disagree(const DecisionProblem& problem) {
  const auto qualitative = rank_acts(problem);
  const auto maximin = maximin_rank(problem);
  const std::string& q_top = qualitative.front().act;
  const std::string& m_top = maximin.front().act;
  if (q_top == m_top) return false;
  const auto utility_of = [&](const std::string& act) {
    return scalar_utility(
        std::find_if(qualitative.begin(), qualitative.end(),
                     [&](const RankedAct& r) { return r.act == act; })
            ->utility);
  };
  const auto worst_of = [&](const std::string& act) {
    return std::find_if(maximin.begin(), maximin.end(),
                        [&](const MaximinEntry& m) { return m.act == act; })
        ->worst;
  };
  return utility_of(q_top) > utility_of(m_top) && worst_of(m_top) < worst_of(q_top);
}

DecisionProblem problem_from_act_lotteries(std::vector<std::string> acts,
                                           std::span<const SimpleLottery> lotteries,
                                           const PrizeAssessment& assessment) {
  if (acts.size() != lotteries.size()) {
    throw Error(Errc::InvalidProblem, "one lottery per act is required");
  }
  if (acts.empty()) throw Error(Errc::InvalidProblem, "decision problem has no acts");
  const PrizeSet& prizes = assessment.prizes();
  std::vector<std::vector<std::size_t>> support(lotteries.size());
  for (std::size_t a = 0; a < lotteries.size(); ++a) {
    if (lotteries[a].prizes() != prizes) {
      throw Error(Errc::PrizeSetMismatch, "act lottery uses a different prize set");
    }
    for (std::size_t j = 0; j < prizes.size(); ++j) {
      if (lotteries[a][j].is_finite()) support[a].push_back(j);
    }
  }

  std::vector<std::string> state_labels;
  std::vector<ExtNat> potential;
  std::vector<std::vector<std::string>> outcomes(acts.size());
  std::vector<std::size_t> pick(acts.size(), 0);
  while (true) {
    std::string label = "s";
    ExtNat rank = 0;
    for (std::size_t a = 0; a < acts.size(); ++a) {
      const std::size_t prize = support[a][pick[a]];
      if (a) label += '_';
      label += std::to_string(prize + 1);
      rank += lotteries[a][prize];
      outcomes[a].push_back(prizes[prize]);
    }
    state_labels.push_back(std::move(label));
    potential.push_back(rank);

    std::size_t a = acts.size();
    while (a-- > 0) {
      if (++pick[a] < support[a].size()) break;
      pick[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  auto belief = DisbeliefFunction::make(Frame(std::move(state_labels)), std::move(potential));
  return DecisionProblem::make(std::move(acts), outcomes, std::move(belief), assessment);
}

namespace {

// Every vector over {0..max_delta, INF}^r with minimum 0, lexicographic with
// INF last.
std::vector<std::vector<ExtNat>> normalized_vectors(std::size_t r, std::uint64_t max_delta) {
  std::vector<ExtNat> alphabet;
  for (std::uint64_t d = 0; d <= max_delta; ++d) alphabet.emplace_back(d);
  alphabet.push_back(INF);

  std::vector<std::vector<ExtNat>> out;
  std::vector<std::size_t> digit(r, 0);
  while (true) {
    std::vector<ExtNat> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = alphabet[digit[i]];
    if (*std::min_element(v.begin(), v.end()) == ExtNat{0}) out.push_back(std::move(v));
    std::size_t i = r;
    while (i-- > 0) {
      if (++digit[i] < alphabet.size()) break;
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

UtilityValue from_scalar(std::int64_t s) {
  if (s >= 0) return UtilityValue::make(0, s);
  return UtilityValue::make(-s, 0);
}

// Strictly decreasing scalar utilities for the r - 2 interior prizes, drawn
// from max_delta down to -max_delta, in lexicographic order of positions.
std::vector<std::vector<std::int64_t>> interior_assessments(std::size_t interior,
                                                            std::uint64_t max_delta) {
  std::vector<std::int64_t> scale;
  const auto top = static_cast<std::int64_t>(max_delta);
  for (std::int64_t s = top; s >= -top; --s) scale.push_back(s);

  std::vector<std::vector<std::int64_t>> out;
  if (interior > scale.size()) return out;
  std::vector<std::size_t> pos(interior);
  for (std::size_t i = 0; i < interior; ++i) pos[i] = i;
  while (true) {
    std::vector<std::int64_t> pick;
    for (std::size_t p : pos) pick.push_back(scale[p]);
    out.push_back(std::move(pick));
    std::size_t i = interior;
    while (i-- > 0) {
      if (pos[i] < scale.size() - interior + i) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pos[i];
    for (std::size_t k = i + 1; k < interior; ++k) pos[k] = pos[k - 1] + 1;
  }
  return out;
}

}  // namespace

std::optional<DecisionProblem> find_maximin_disagreement(const SearchBounds& bounds) {
  std::uint64_t candidates = 0;
  for (std::size_t r = 2; r <= bounds.max_prizes; ++r) {
    std::vector<std::string> labels;
    for (std::size_t j = 1; j <= r; ++j) labels.push_back("o" + std::to_string(j));
    const PrizeSet prizes(labels);
    const auto vectors = normalized_vectors(r, bounds.max_delta);

    for (std::size_t n = 2; n <= bounds.acts; ++n) {
      for (const auto& interior : interior_assessments(r - 2, bounds.max_delta)) {
        std::vector<UtilityValue> values{UtilityValue::best()};
        for (auto s : interior) values.push_back(from_scalar(s));
        values.push_back(UtilityValue::worst());
        const auto assessment = PrizeAssessment::make(prizes, std::move(values));

        std::vector<ExtInt> utility;
        std::vector<std::size_t> worst;
        std::vector<SimpleLottery> lotteries;
        for (const auto& v : vectors) {
          lotteries.push_back(SimpleLottery::make(prizes, v));
          utility.push_back(scalar_utility(evaluate(lotteries.back(), assessment)));
          worst.push_back(worst_reachable(v));
        }

        std::vector<std::size_t> pick(n, 0);
        while (true) {
          if (bounds.max_candidates && candidates >= *bounds.max_candidates) {
            return std::nullopt;
          }
          ++candidates;
          std::size_t q_top = 0;
          std::size_t m_top = 0;
          for (std::size_t a = 1; a < n; ++a) {
            if (utility[pick[a]] > utility[pick[q_top]]) q_top = a;
            if (worst[pick[a]] < worst[pick[m_top]]) m_top = a;
          }
          if (q_top != m_top && utility[pick[q_top]] > utility[pick[m_top]] &&
              worst[pick[m_top]] < worst[pick[q_top]]) {
            std::vector<std::string> acts;
            std::vector<SimpleLottery> chosen;
            for (std::size_t a = 0; a < n; ++a) {
              acts.push_back(std::string(1, static_cast<char>('A' + a % 26)) +
                             (a >= 26 ? std::to_string(a / 26) : std::string()));
              chosen.push_back(lotteries[pick[a]]);
            }
            auto problem = problem_from_act_lotteries(std::move(acts), chosen, assessment);
            if (!rules_disagree(problem)) {
              throw Error(Errc::InvariantBreach, "search witness fails verification");
            }
            return problem;
          }
          std::size_t a = n;
          while (a-- > 0) {
            if (++pick[a] < vectors.size()) break;
            pick[a] = 0;
          }
          if (a == static_cast<std::size_t>(-1)) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace kappa
