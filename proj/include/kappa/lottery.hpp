#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/ext_num.hpp"
#include "kappa/labels.hpp"

namespace kappa {

/// Prizes in strict preference order, best first. At least two prizes.
class PrizeSet {
 public:
  /// Throws TooFewPrizes or DuplicateLabel.
  explicit PrizeSet(std::vector<std::string> prizes);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_.labels(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::string& best() const { return labels_[0]; }
  const std::string& worst() const { return labels_[size() - 1]; }

  /// Throws UnknownPrize.
  std::size_t index_of(std::string_view prize) const;
  bool contains(std::string_view prize) const { return labels_.find(prize).has_value(); }

  friend bool operator==(const PrizeSet&, const PrizeSet&) = default;

 private:
  detail::LabelList labels_;
};

/// Normalized disbelief vector indexed by the full prize set.
class SimpleLottery {
 public:
  /// Throws LengthMismatch, AllInfinite or NotNormalized.
  static SimpleLottery make(PrizeSet prizes, std::vector<ExtNat> deltas);

  const PrizeSet& prizes() const noexcept { return prizes_; }
  std::span<const ExtNat> deltas() const noexcept { return deltas_; }
  ExtNat operator[](std::size_t i) const { return deltas_.at(i); }

  /// "o1:4 o2:0 o3:inf"
  std::string to_string() const;

  friend bool operator==(const SimpleLottery&, const SimpleLottery&) = default;

 private:
  SimpleLottery(PrizeSet prizes, std::vector<ExtNat> deltas)
      : prizes_(std::move(prizes)), deltas_(std::move(deltas)) {}

  PrizeSet prizes_;
  std::vector<ExtNat> deltas_;
};

/// The prize as a degenerate lottery: 0 at its index, INF elsewhere.
SimpleLottery prize_lottery(std::string_view prize, const PrizeSet& prizes);

struct Branch;

/// Lottery tree. A leaf is a prize; a node carries a disbelief degree per
/// branch with minimum exactly 0. Subtrees are shared and immutable.
class Lottery {
 public:
  /// Throws UnknownPrize.
  static Lottery leaf(const PrizeSet& prizes, std::string_view prize);
  static Lottery leaf(const PrizeSet& prizes, std::size_t index);

  /// Throws EmptyBranches, PrizeSetMismatch or NotNormalized.
  static Lottery node(std::vector<Branch> branches);

  /// Depth-1 node over leaves; INF entries are left out as unreachable.
  static Lottery from_simple(const SimpleLottery& simple);

  bool is_leaf() const noexcept { return branches_ == nullptr; }
  const PrizeSet& prizes() const noexcept { return prizes_; }

  /// Prize index of a leaf.
  std::size_t prize() const noexcept { return prize_; }
  std::span<const Branch> branches() const noexcept;

  friend bool operator==(const Lottery& a, const Lottery& b);

 private:
  Lottery(PrizeSet prizes, std::size_t prize,
          std::shared_ptr<const std::vector<Branch>> branches)
      : prizes_(std::move(prizes)), prize_(prize), branches_(std::move(branches)) {}

  PrizeSet prizes_;
  std::size_t prize_ = 0;
  std::shared_ptr<const std::vector<Branch>> branches_;
};

struct Branch {
  ExtNat delta;
  Lottery child;

  friend bool operator==(const Branch&, const Branch&) = default;
};

inline std::span<const Branch> Lottery::branches() const noexcept {
  if (!branches_) return {};
  return *branches_;
}

/// Leaf is 0, node is one more than its deepest child.
std::size_t depth(const Lottery& lottery);

/// Collapses a compound lottery: the degree for prize j is the minimum over
/// branches i of (delta_i + degree of j in the reduced child i).
SimpleLottery reduce(const Lottery& lottery);

}  // namespace kappa
