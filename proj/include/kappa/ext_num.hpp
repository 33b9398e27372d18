#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "kappa/errors.hpp"

namespace kappa {

/// Non-negative integer extended with a single infinity.
///
/// Addition saturates at infinity; a finite sum that does not fit the
/// underlying integer throws Errc::Overflow instead of wrapping. The largest
/// machine value is reserved as the infinity sentinel, so the derived
/// ordering is the natural one with INF above every finite value.
class ExtNat {
 public:
  using value_type = std::uint64_t;

  static constexpr value_type kInfRep = std::numeric_limits<value_type>::max();
  static constexpr value_type kMaxFinite = kInfRep - 1;

  constexpr ExtNat() noexcept = default;

  template <std::integral T>
  constexpr ExtNat(T v) : rep_(checked(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat inf() noexcept { return ExtNat(kInfRep, Raw{}); }

  constexpr bool is_inf() const noexcept { return rep_ == kInfRep; }
  constexpr bool is_finite() const noexcept { return rep_ != kInfRep; }

  /// Finite value; throws OutOfRange on INF.
  constexpr value_type value() const {
    if (is_inf()) throw Error(Errc::OutOfRange, "value() of INF");
    return rep_;
  }

  std::string to_string() const;

  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;
  friend constexpr bool operator==(ExtNat, ExtNat) = default;

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) return inf();
    if (a.rep_ > kMaxFinite - b.rep_) {
      throw Error(Errc::Overflow, "ExtNat addition overflows");
    }
    return ExtNat(a.rep_ + b.rep_, Raw{});
  }

  ExtNat& operator+=(ExtNat other) { return *this = *this + other; }

  /// a - b for finite b <= a; INF - finite stays INF.
  friend constexpr ExtNat operator-(ExtNat a, ExtNat b) {
    if (b.is_inf()) throw Error(Errc::OutOfRange, "cannot subtract INF");
    if (a.is_inf()) return a;
    if (b.rep_ > a.rep_) {
      throw Error(Errc::OutOfRange, "ExtNat subtraction below zero");
    }
    return ExtNat(a.rep_ - b.rep_, Raw{});
  }

 private:
  struct Raw {};
  constexpr ExtNat(value_type rep, Raw) noexcept : rep_(rep) {}

  template <std::integral T>
  static constexpr value_type checked(T v) {
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw Error(Errc::OutOfRange, "ExtNat must be non-negative");
    }
    if (static_cast<std::uintmax_t>(v) > kMaxFinite) {
      throw Error(Errc::Overflow, "ExtNat value too large");
    }
    return static_cast<value_type>(v);
  }

  value_type rep_ = 0;
};

inline constexpr ExtNat INF = ExtNat::inf();

std::ostream& operator<<(std::ostream& os, ExtNat v);

/// Integer extended with -INF and +INF.
class ExtInt {
 public:
  using value_type = std::int64_t;

  static constexpr value_type kNegInfRep = std::numeric_limits<value_type>::min();
  static constexpr value_type kPosInfRep = std::numeric_limits<value_type>::max();

  constexpr ExtInt() noexcept = default;

  template <std::integral T>
  constexpr ExtInt(T v) : rep_(checked(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt pos_inf() noexcept { return ExtInt(kPosInfRep, Raw{}); }
  static constexpr ExtInt neg_inf() noexcept { return ExtInt(kNegInfRep, Raw{}); }

  constexpr bool is_pos_inf() const noexcept { return rep_ == kPosInfRep; }
  constexpr bool is_neg_inf() const noexcept { return rep_ == kNegInfRep; }
  constexpr bool is_finite() const noexcept {
    return !is_pos_inf() && !is_neg_inf();
  }

  constexpr value_type value() const {
    if (!is_finite()) throw Error(Errc::OutOfRange, "value() of infinite ExtInt");
    return rep_;
  }

  /// "+inf", "-inf" or the decimal value.
  std::string to_string() const;

  friend constexpr auto operator<=>(ExtInt, ExtInt) = default;
  friend constexpr bool operator==(ExtInt, ExtInt) = default;

  friend constexpr ExtInt operator-(ExtInt v) noexcept {
    if (v.is_pos_inf()) return neg_inf();
    if (v.is_neg_inf()) return pos_inf();
    return ExtInt(-v.rep_, Raw{});
  }

  /// Lifts a non-negative extended value (INF maps to +INF).
  static ExtInt from(ExtNat v);

  /// a - b. INF - INF has no value and throws InvariantBreach.
  static ExtInt difference(ExtNat a, ExtNat b);

 private:
  struct Raw {};
  constexpr ExtInt(value_type rep, Raw) noexcept : rep_(rep) {}

  template <std::integral T>
  static constexpr value_type checked(T v) {
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<std::intmax_t>(v) <= kNegInfRep ||
          static_cast<std::intmax_t>(v) >= kPosInfRep) {
        throw Error(Errc::Overflow, "ExtInt value out of range");
      }
    } else {
      if (static_cast<std::uintmax_t>(v) >=
          static_cast<std::uintmax_t>(kPosInfRep)) {
        throw Error(Errc::Overflow, "ExtInt value out of range");
      }
    }
    return static_cast<value_type>(v);
  }

  value_type rep_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExtInt v);

}  // namespace kappa
