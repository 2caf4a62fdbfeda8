#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace rigidity {

/// Non-negative fraction kept in lowest terms with a positive denominator.
class RatioValue {
 public:
  constexpr RatioValue() = default;
  constexpr RatioValue(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", always with an explicit denominator.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const RatioValue&, const RatioValue&) = default;
  friend constexpr std::strong_ordering operator<=>(const RatioValue& a,
                                                    const RatioValue& b) {
    // Both denominators are positive; values here stay far below 2^31.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rigidity
