#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kappa::detail {

// Immutable ordered list of distinct labels with O(log n) lookup. Copies share
// storage, so frames and prize sets are cheap to pass around by value.
class LabelList {
 public:
  LabelList();
  explicit LabelList(std::vector<std::string> labels);

  std::size_t size() const noexcept { return data_->labels.size(); }
  std::span<const std::string> labels() const noexcept { return data_->labels; }
  const std::string& operator[](std::size_t i) const { return data_->labels.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;

  // Empty when every label is distinct, otherwise the first repeated label.
  std::optional<std::string> first_duplicate() const { return data_->duplicate; }

  friend bool operator==(const LabelList& a, const LabelList& b) noexcept {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;
    std::optional<std::string> duplicate;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace kappa::detail
