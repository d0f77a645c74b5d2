#include "parenbraid/dyadic.hpp"

#include <stdexcept>

#include "parenbraid/errors.hpp"

namespace parenbraid {

namespace {

constexpr int kMaxExponent = 62;

std::int64_t shl_checked(std::int64_t v, int k) {
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(v, std::int64_t{2}, &v)) throw std::overflow_error("dyadic overflow");
  }
  return v;
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exponent < 0) throw DomainError("dyadic exponent must be nonnegative");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent too large");
}

Dyadic Dyadic::times_power_of_two(int k) const {
  if (k >= 0) {
    const int absorbed = k < exp_ ? k : exp_;
    return Dyadic(shl_checked(num_, k - absorbed), exp_ - absorbed);
  }
  return Dyadic(num_, exp_ - k);
}

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  const int e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  std::int64_t sum = 0;
  if (__builtin_add_overflow(shl_checked(x.num_, e - x.exp_), shl_checked(y.num_, e - y.exp_), &sum)) {
    throw std::overflow_error("dyadic overflow");
  }
  return Dyadic(sum, e);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + Dyadic(-y.num_, y.exp_); }

std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  const int e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  return shl_checked(x.num_, e - x.exp_) <=> shl_checked(y.num_, e - y.exp_);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

int log2_ratio(const Dyadic& y, const Dyadic& x) {
  if (x.num_ <= 0 || y.num_ <= 0) throw DomainError("log2_ratio needs positive arguments");
  // y/x = (ny / nx) * 2^(ex - ey) with ny, nx odd in lowest terms unless exponent 0.
  std::int64_t ny = y.num_;
  std::int64_t nx = x.num_;
  int k = x.exp_ - y.exp_;
  while (ny % 2 == 0) {
    ny /= 2;
    ++k;
  }
  while (nx % 2 == 0) {
    nx /= 2;
    --k;
  }
  if (ny != nx) throw DomainError("ratio is not a power of two");
  return k;
}

}  // namespace parenbraid
