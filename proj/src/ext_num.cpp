#include "kappa/ext_num.hpp"

namespace kappa {

std::string ExtNat::to_string() const {
  return is_inf() ? std::string("inf") : std::to_string(rep_);
}

std::ostream& operator<<(std::ostream& os, ExtNat v) {
  return os << v.to_string();
}

std::string ExtInt::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  return std::to_string(rep_);
}

std::ostream& operator<<(std::ostream& os, ExtInt v) {
  return os << v.to_string();
}

ExtInt ExtInt::from(ExtNat v) {
  if (v.is_inf()) return pos_inf();
  return ExtInt(v.value());
}

ExtInt ExtInt::difference(ExtNat a, ExtNat b) {
  if (a.is_inf() && b.is_inf()) {
    throw Error(Errc::InvariantBreach, "INF - INF is undefined");
  }
  if (a.is_inf()) return pos_inf();
  if (b.is_inf()) return neg_inf();
  const auto x = a.value();
  const auto y = b.value();
  if (x >= y) return ExtInt(x - y);
  return -ExtInt(y - x);
}

}  // namespace kappa
