#include "kappa/disbelief.hpp"

#include <algorithm>

namespace kappa {
namespace {

std::vector<bool> event_mask(const Frame& frame, const Event& event) {
  std::vector<bool> mask(frame.size(), false);
  for (const auto& world : event) mask[frame.index_of(world)] = true;
  return mask;
}

ExtNat masked_min(std::span<const ExtNat> potential, const std::vector<bool>& mask) {
  ExtNat best = INF;
  for (std::size_t i = 0; i < potential.size(); ++i) {
    if (mask[i]) best = std::min(best, potential[i]);
  }
  return best;
}

}  // namespace

Frame::Frame(std::vector<std::string> worlds) : labels_(std::move(worlds)) {
  if (labels_.size() == 0) throw Error(Errc::EmptyFrame, "frame has no worlds");
  if (auto dup = labels_.first_duplicate()) {
    throw Error(Errc::DuplicateLabel, "duplicate world '" + *dup + "'");
  }
}

std::size_t Frame::index_of(std::string_view world) const {
  if (auto i = labels_.find(world)) return *i;
  throw Error(Errc::UnknownWorld, "unknown world '" + std::string(world) + "'");
}

DisbeliefFunction DisbeliefFunction::make(Frame frame, std::vector<ExtNat> potential) {
  if (potential.size() != frame.size()) {
    throw Error(Errc::LengthMismatch,
                "potential has " + std::to_string(potential.size()) +
                    " entries, frame has " + std::to_string(frame.size()));
  }
  const ExtNat least = *std::min_element(potential.begin(), potential.end());
  if (least.is_inf()) {
    throw Error(Errc::AllInfinite, "every world is disbelieved with certainty");
  }
  if (least != ExtNat{0}) {
    throw Error(Errc::NotNormalized,
                "S1 violated: min potential is " + least.to_string());
  }
  return DisbeliefFunction(std::move(frame), std::move(potential));
}

std::vector<ExtNat> normalize(std::span<const ExtNat> potential) {
  if (potential.empty()) throw Error(Errc::AllInfinite, "empty potential");
  const ExtNat least = *std::min_element(potential.begin(), potential.end());
  if (least.is_inf()) {
    throw Error(Errc::AllInfinite, "every entry is INF");
  }
  std::vector<ExtNat> out;
  out.reserve(potential.size());
  for (ExtNat v : potential) out.push_back(v - least);
  return out;
}

DisbeliefFunction normalize(Frame frame, std::span<const ExtNat> potential) {
  return DisbeliefFunction::make(std::move(frame), normalize(potential));
}

ExtNat disbelief_of_event(const DisbeliefFunction& d, const Event& event) {
  return masked_min(d.potential(), event_mask(d.frame(), event));
}

DisbeliefFunction condition(const DisbeliefFunction& d, const Event& event) {
  const auto mask = event_mask(d.frame(), event);
  const ExtNat rank = masked_min(d.potential(), mask);
  if (rank.is_inf()) {
    throw Error(Errc::ConditionOnDisbelievedCertainty,
                "cannot condition on an event of rank INF");
  }
  std::vector<ExtNat> out(d.frame().size(), INF);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (mask[i]) out[i] = d[i] - rank;
  }
  return DisbeliefFunction::make(d.frame(), std::move(out));
}

DisbeliefFunction combine(const DisbeliefFunction& a, const DisbeliefFunction& b) {
  if (a.frame() != b.frame()) {
    throw Error(Errc::FrameMismatch, "combine requires identical frames");
  }
  std::vector<ExtNat> sum(a.frame().size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return normalize(a.frame(), sum);
}

DisbeliefFunction marginalize(const DisbeliefFunction& d,
                              const std::map<std::string, std::string>& grouping) {
  const Frame& fine = d.frame();
  for (const auto& [world, label] : grouping) {
    if (!fine.contains(world)) {
      throw Error(Errc::UnknownWorld, "grouping names unknown world '" + world + "'");
    }
  }
  std::vector<std::string> coarse_labels;
  std::vector<ExtNat> coarse;
  std::map<std::string, std::size_t, std::less<>> slot;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const auto it = grouping.find(fine[i]);
    if (it == grouping.end()) {
      throw Error(Errc::IncompleteGrouping, "grouping misses world '" + fine[i] + "'");
    }
    const auto [pos, fresh] = slot.emplace(it->second, coarse_labels.size());
    if (fresh) {
      coarse_labels.push_back(it->second);
      coarse.push_back(d[i]);
    } else {
      coarse[pos->second] = std::min(coarse[pos->second], d[i]);
    }
  }
  return DisbeliefFunction::make(Frame(std::move(coarse_labels)), std::move(coarse));
}

ExtInt belief(const DisbeliefFunction& d, const Event& event) {
  auto mask = event_mask(d.frame(), event);
  const ExtNat rank = masked_min(d.potential(), mask);
  if (rank > ExtNat{0}) return -ExtInt::from(rank);
  mask.flip();
  return ExtInt::from(masked_min(d.potential(), mask));
}

bool independent(const DisbeliefFunction& d, const Event& a, const Event& b) {
  const auto mask_a = event_mask(d.frame(), a);
  const auto mask_b = event_mask(d.frame(), b);
  std::vector<bool> both(mask_a.size());
  for (std::size_t i = 0; i < both.size(); ++i) both[i] = mask_a[i] && mask_b[i];
  const auto p = d.potential();
  return masked_min(p, both) == masked_min(p, mask_a) + masked_min(p, mask_b);
}

}  // namespace kappa
