#include "kappa/lottery.hpp"

#include <algorithm>

namespace kappa {

PrizeSet::PrizeSet(std::vector<std::string> prizes) : labels_(std::move(prizes)) {
  if (labels_.size() < 2) {
    throw Error(Errc::TooFewPrizes, "a prize set needs at least two prizes");
  }
  if (auto dup = labels_.first_duplicate()) {
    throw Error(Errc::DuplicateLabel, "duplicate prize '" + *dup + "'");
  }
}

std::size_t PrizeSet::index_of(std::string_view prize) const {
  if (auto i = labels_.find(prize)) return *i;
  throw Error(Errc::UnknownPrize, "unknown prize '" + std::string(prize) + "'");
}

SimpleLottery SimpleLottery::make(PrizeSet prizes, std::vector<ExtNat> deltas) {
  if (deltas.size() != prizes.size()) {
    throw Error(Errc::LengthMismatch,
                "lottery has " + std::to_string(deltas.size()) + " deltas for " +
                    std::to_string(prizes.size()) + " prizes");
  }
  const ExtNat least = *std::min_element(deltas.begin(), deltas.end());
  if (least.is_inf()) throw Error(Errc::AllInfinite, "every prize has delta INF");
  if (least != ExtNat{0}) {
    throw Error(Errc::NotNormalized, "min delta is " + least.to_string());
  }
  return SimpleLottery(std::move(prizes), std::move(deltas));
}

std::string SimpleLottery::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < deltas_.size(); ++i) {
    if (i) out += ' ';
    out += prizes_[i] + ':' + deltas_[i].to_string();
  }
  return out;
}

SimpleLottery prize_lottery(std::string_view prize, const PrizeSet& prizes) {
  std::vector<ExtNat> deltas(prizes.size(), INF);
  deltas[prizes.index_of(prize)] = 0;
  return SimpleLottery::make(prizes, std::move(deltas));
}

Lottery Lottery::leaf(const PrizeSet& prizes, std::string_view prize) {
  return Lottery(prizes, prizes.index_of(prize), nullptr);
}

Lottery Lottery::leaf(const PrizeSet& prizes, std::size_t index) {
  if (index >= prizes.size()) {
    throw Error(Errc::UnknownPrize, "prize index " + std::to_string(index) + " out of range");
  }
  return Lottery(prizes, index, nullptr);
}

Lottery Lottery::node(std::vector<Branch> branches) {
  if (branches.empty()) throw Error(Errc::EmptyBranches, "node has no branches");
  const PrizeSet& prizes = branches.front().child.prizes();
  ExtNat least = INF;
  for (const auto& b : branches) {
    if (b.child.prizes() != prizes) {
      throw Error(Errc::PrizeSetMismatch, "children use different prize sets");
    }
    least = std::min(least, b.delta);
  }
  if (least != ExtNat{0}) {
    throw Error(Errc::NotNormalized, "min delta is " + least.to_string());
  }
  PrizeSet shared = prizes;
  return Lottery(std::move(shared), 0,
                 std::make_shared<const std::vector<Branch>>(std::move(branches)));
}

Lottery Lottery::from_simple(const SimpleLottery& simple) {
  std::vector<Branch> branches;
  for (std::size_t i = 0; i < simple.prizes().size(); ++i) {
    if (simple[i].is_finite()) branches.push_back({simple[i], leaf(simple.prizes(), i)});
  }
  return node(std::move(branches));
}

bool operator==(const Lottery& a, const Lottery& b) {
  if (a.prizes_ != b.prizes_ || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.prize_ == b.prize_;
  if (a.branches_ == b.branches_) return true;
  return std::ranges::equal(a.branches(), b.branches());
}

std::size_t depth(const Lottery& lottery) {
  if (lottery.is_leaf()) return 0;
  std::size_t deepest = 0;
  for (const auto& b : lottery.branches()) deepest = std::max(deepest, depth(b.child));
  return deepest + 1;
}

namespace {

std::vector<ExtNat> reduce_vector(const Lottery& lottery) {
  std::vector<ExtNat> out(lottery.prizes().size(), INF);
  if (lottery.is_leaf()) {
    out[lottery.prize()] = 0;
    return out;
  }
  for (const auto& b : lottery.branches()) {
    if (b.delta.is_inf()) continue;
    const auto child = reduce_vector(b.child);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = std::min(out[j], b.delta + child[j]);
    }
  }
  return out;
}

}  // namespace

SimpleLottery reduce(const Lottery& lottery) {
  return SimpleLottery::make(lottery.prizes(), reduce_vector(lottery));
}

}  // namespace kappa
