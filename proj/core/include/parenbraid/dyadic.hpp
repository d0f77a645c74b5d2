#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace parenbraid {

// Exact rational numerator / 2^exponent, kept in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t numerator, int exponent);  // exponent >= 0

  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic half() { return Dyadic(1, 1); }

  std::int64_t numerator() const noexcept { return num_; }
  int exponent() const noexcept { return exp_; }

  // Multiplication by 2^k, k of either sign.
  Dyadic times_power_of_two(int k) const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y);

  // "13/32", "0", "1".
  std::string to_string() const;

  // log2(y / x) when y / x is a power of two; x, y > 0.
  friend int log2_ratio(const Dyadic& y, const Dyadic& x);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace parenbraid
