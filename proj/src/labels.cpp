#include "kappa/labels.hpp"

namespace kappa::detail {

LabelList::LabelList() : data_(std::make_shared<const Data>()) {}

LabelList::LabelList(std::vector<std::string> labels) {
  Data data;
  data.labels = std::move(labels);
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    const auto [it, inserted] = data.index.emplace(data.labels[i], i);
    if (!inserted && !data.duplicate) data.duplicate = data.labels[i];
  }
  data_ = std::make_shared<const Data>(std::move(data));
}

std::optional<std::size_t> LabelList::find(std::string_view label) const {
  const auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

}  // namespace kappa::detail
