#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/ext_num.hpp"
#include "kappa/labels.hpp"

namespace kappa {

/// Finite set of possible worlds. Label order fixes the canonical indexing.
class Frame {
 public:
  /// Throws EmptyFrame or DuplicateLabel.
  explicit Frame(std::vector<std::string> worlds);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> worlds() const noexcept { return labels_.labels(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }

  /// Throws UnknownWorld.
  std::size_t index_of(std::string_view world) const;
  bool contains(std::string_view world) const { return labels_.find(world).has_value(); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  detail::LabelList labels_;
};

/// A set of worlds, given by label.
using Event = std::vector<std::string>;

/// Disbelief potential over a frame, normalized so the least disbelieved
/// world has rank 0. The rank of an event is the minimum over its members.
class DisbeliefFunction {
 public:
  /// Throws LengthMismatch, AllInfinite, or NotNormalized.
  static DisbeliefFunction make(Frame frame, std::vector<ExtNat> potential);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const ExtNat> potential() const noexcept { return potential_; }
  ExtNat operator[](std::size_t i) const { return potential_.at(i); }
  ExtNat at(std::string_view world) const { return potential_[frame_.index_of(world)]; }

  friend bool operator==(const DisbeliefFunction&, const DisbeliefFunction&) = default;

 private:
  DisbeliefFunction(Frame frame, std::vector<ExtNat> potential)
      : frame_(std::move(frame)), potential_(std::move(potential)) {}

  Frame frame_;
  std::vector<ExtNat> potential_;
};

/// Shifts every finite entry down by the finite minimum. Throws AllInfinite.
std::vector<ExtNat> normalize(std::span<const ExtNat> potential);
DisbeliefFunction normalize(Frame frame, std::span<const ExtNat> potential);

/// Rank of an event: minimum over its worlds, INF for the empty event.
ExtNat disbelief_of_event(const DisbeliefFunction& d, const Event& event);

/// Revision on evidence A: worlds outside A become INF, worlds inside are
/// shifted down by the rank of A. Throws ConditionOnDisbelievedCertainty
/// when A has rank INF.
DisbeliefFunction condition(const DisbeliefFunction& d, const Event& event);

/// Pointwise sum followed by normalization. Throws FrameMismatch or AllInfinite.
DisbeliefFunction combine(const DisbeliefFunction& a, const DisbeliefFunction& b);

/// Coarsens the frame: each world maps to a coarse label, and a coarse world
/// gets the minimum over its preimage. Coarse labels appear in order of first
/// occurrence in the fine frame.
DisbeliefFunction marginalize(const DisbeliefFunction& d,
                              const std::map<std::string, std::string>& grouping);

/// Signed degree of belief in A: -rank(A) when A is disbelieved, otherwise
/// the rank of its complement.
ExtInt belief(const DisbeliefFunction& d, const Event& event);

/// rank(A and B) == rank(A) + rank(B).
bool independent(const DisbeliefFunction& d, const Event& a, const Event& b);

}  // namespace kappa
