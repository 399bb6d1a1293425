#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace virality {

// Exact non-negative-denominator fraction over 64-bit integers. Metric values
// are kept in this form so threshold tests never depend on floating-point
// rounding. Comparisons widen to 128 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Fixed-point rendering, rounded half away from zero, computed in integer
  // arithmetic.
  std::string to_decimal(int places) const;

  // Parses "50", "0.9", "-3.25", "1/3". Throws ParameterError.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace virality
