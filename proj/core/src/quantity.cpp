#include "goal_arbiter/quantity.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "goal_arbiter/ids.hpp"

namespace goal_arbiter {

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (std::isspace(c) || std::iscntrl(c)) return false;
  }
  return true;
}

std::optional<Quantity> Quantity::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string digits;
  int exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      digits.push_back(c);
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return std::nullopt;

  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    int exp_value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exp_value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    exponent += exp_value;
    pos = text.size();
  }
  if (pos != text.size()) return std::nullopt;

  // Shift to micro-units: value = digits * 10^(exponent + 6).
  int shift = exponent + kFractionDigits;
  while (shift < 0) {
    if (digits.empty() || digits.back() != '0') {
      // Would lose a non-zero digit below the sixth decimal place.
      bool all_zero = digits.find_first_not_of('0') == std::string::npos;
      if (!all_zero) return std::nullopt;
      digits = "0";
      shift = 0;
      break;
    }
    digits.pop_back();
    ++shift;
  }
  const auto first_nonzero = digits.find_first_not_of('0');
  if (first_nonzero == std::string::npos) return Quantity{};
  digits.erase(0, first_nonzero);
  if (digits.size() + static_cast<std::size_t>(shift) > 18) return std::nullopt;
  digits.append(static_cast<std::size_t>(shift), '0');

  std::int64_t micros = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), micros);
  if (ec != std::errc{}) return std::nullopt;
  if (micros > kMaxUnits * kScale) return std::nullopt;
  return from_micros(negative ? -micros : micros);
}

std::optional<Quantity> Quantity::from_double(double value) {
  if (!std::isfinite(value)) return std::nullopt;
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return std::nullopt;
  return parse(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

std::string Quantity::to_string() const {
  std::int64_t magnitude = micros_ < 0 ? -micros_ : micros_;
  std::string out = micros_ < 0 ? "-" : "";
  out += std::to_string(magnitude / kScale);
  std::int64_t frac = magnitude % kScale;
  if (frac != 0) {
    std::string frac_text = std::to_string(frac);
    frac_text.insert(0, static_cast<std::size_t>(kFractionDigits) - frac_text.size(), '0');
    while (frac_text.back() == '0') frac_text.pop_back();
    out += '.';
    out += frac_text;
  }
  return out;
}

}  // namespace goal_arbiter
