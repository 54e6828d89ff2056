#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "lsobstruct/errors.hpp"

namespace lsobstruct {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 abs128(int128 v) {
  return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Exact fraction with reduced 64-bit storage, denominator > 0. Intermediates
// are carried in 128 bits; results that do not reduce back into 64 bits throw
// OverflowError instead of wrapping. No floating point is involved anywhere;
// approx() is display-only.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  static Rational make(detail::int128 num, detail::int128 den) {
    if (den == 0) throw Error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Rational r;
    if (num == 0) return r;
    const detail::uint128 g = detail::gcd128(detail::abs128(num), detail::abs128(den));
    r.num_ = narrow(num / static_cast<detail::int128>(g));
    r.den_ = narrow(den / static_cast<detail::int128>(g));
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator-(const Rational& x) { return make(-detail::int128(x.num_), x.den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make(detail::int128(x.num_) * y.den_ + detail::int128(y.num_) * x.den_,
                detail::int128(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make(detail::int128(x.num_) * y.den_ - detail::int128(y.num_) * x.den_,
                detail::int128(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(detail::int128(x.num_) * y.num_, detail::int128(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw Error("Rational: division by zero");
    return make(detail::int128(x.num_) * y.den_, detail::int128(x.den_) * y.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Reduced storage makes field comparison exact equality.
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const detail::int128 lhs = detail::int128(x.num_) * y.den_;
    const detail::int128 rhs = detail::int128(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "-23/13"; integers render without the denominator.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t narrow(detail::int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("Rational: value exceeds the 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lsobstruct
