#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace goal_arbiter {

/// Non-negative resource amount stored as an exact decimal with six
/// fractional digits. Sums and comparisons are exact, so a need of
/// 0.1 + 0.2 against an availability of 0.3 is not a conflict.
class Quantity {
public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;
  /// Largest accepted amount in whole units. Keeps any realistic sum of
  /// needs far inside the 64-bit range.
  static constexpr std::int64_t kMaxUnits = 1'000'000'000;

  constexpr Quantity() = default;

  static constexpr Quantity from_micros(std::int64_t micros) {
    Quantity q;
    q.micros_ = micros;
    return q;
  }
  static constexpr Quantity units(std::int64_t whole) {
    return from_micros(whole * kScale);
  }

  /// Parses a plain or exponent decimal literal ("60", "0.25", "1e2").
  /// Returns nullopt if the text is malformed, has more than six
  /// fractional digits, or lies outside [-kMaxUnits, kMaxUnits].
  static std::optional<Quantity> parse(std::string_view text);

  /// Converts a parsed JSON number through its shortest round-trip decimal
  /// form, which recovers the literal the user wrote for any value with at
  /// most 15 significant digits.
  static std::optional<Quantity> from_double(double value);

  constexpr std::int64_t micros() const noexcept { return micros_; }
  double to_double() const noexcept {
    return static_cast<double>(micros_) / static_cast<double>(kScale);
  }
  /// Canonical decimal text without trailing zeros ("60", "0.5").
  std::string to_string() const;

  constexpr bool is_zero() const noexcept { return micros_ == 0; }
  constexpr bool is_negative() const noexcept { return micros_ < 0; }

  constexpr Quantity& operator+=(Quantity rhs) noexcept {
    micros_ += rhs.micros_;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity rhs) noexcept {
    micros_ -= rhs.micros_;
    return *this;
  }
  friend constexpr Quantity operator+(Quantity a, Quantity b) noexcept { return a += b; }
  friend constexpr Quantity operator-(Quantity a, Quantity b) noexcept { return a -= b; }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;
  friend constexpr bool operator==(Quantity, Quantity) = default;

  friend std::ostream& operator<<(std::ostream& os, Quantity q) {
    return os << q.to_string();
  }

private:
  std::int64_t micros_ = 0;
};

}  // namespace goal_arbiter
