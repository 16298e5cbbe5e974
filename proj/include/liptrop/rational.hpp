#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "liptrop/error.hpp"

namespace liptrop {

/// Exact rational arithmetic on 64-bit numerator/denominator, always stored
/// in lowest terms with a positive denominator. Intermediates go through
/// 128-bit integers; a reduced result that no longer fits raises Overflow.
/// Equality is therefore plain field equality and all identities in the
/// library are checked with tolerance zero.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  /// Accepts "p", "-p", "p/q" with optional leading '-' on the numerator.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Canonical lowest-terms form: "p/q", or plain "p" when q == 1.
  std::string str() const;

  Rational operator-() const { return make(-static_cast<Wide>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::division_by_zero, a.str() + " / 0");
    return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using Wide = __int128;
  static constexpr Wide wide(std::int64_t v) { return static_cast<Wide>(v); }
  static Rational make(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

inline Rational Rational::make(Wide num, Wide den) {
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  Wide g = detail::gcd128(num, den);
  num /= g;
  den /= g;
  constexpr Wide lo = static_cast<Wide>(INT64_MIN);
  constexpr Wide hi = static_cast<Wide>(INT64_MAX);
  if (num < lo || num > hi || den > hi) throw Error(Errc::overflow, "rational out of 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::int64_t& out) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail();
    Wide acc = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      acc = acc * 10 + (text[pos] - '0');
      if (acc > static_cast<Wide>(INT64_MAX)) throw Error(Errc::overflow, std::string(text));
      ++pos;
    }
    out = static_cast<std::int64_t>(acc);
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    digits(den);
  }
  if (pos != text.size()) fail();
  if (den == 0) throw Error(Errc::division_by_zero, std::string(text));
  return make(negative ? -wide(num) : wide(num), den);
}

inline std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

}  // namespace liptrop
