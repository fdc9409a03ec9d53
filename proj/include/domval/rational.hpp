#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "domval/error.hpp"

namespace domval {

// Exact rational number with a canonical representation: reduced, positive
// denominator. Arithmetic runs through __int128 intermediates; any reduced
// result whose numerator or denominator leaves the int64 range raises
// Errc::overflow instead of wrapping. All quantities in this library live in
// [0,1] or close to it, so the headroom is enormous in practice.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) {
    if (d == 0) raise(Errc::division_by_zero, "rational with zero denominator");
    assign(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) raise(Errc::division_by_zero, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Canonical "p/q" rendering, denominator always present. Decimal output is
  // never produced anywhere in the library.
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p" (an exact rational either way).
  // Decimal notation is rejected.
  static Rational parse(std::string_view text) {
    std::size_t pos = 0;
    long long num = parse_integer(text, pos);
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') {
      raise(Errc::invalid_value, "malformed rational '" + std::string(text) + "'");
    }
    ++pos;
    long long den = parse_integer(text, pos);
    if (pos != text.size()) {
      raise(Errc::invalid_value, "trailing characters in rational '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 n, i128 d) {
    Rational r;
    r.assign128(n, d);
    return r;
  }

  void assign(long long n, long long d) { assign128(n, d); }

  void assign128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) {
      raise(Errc::overflow, "rational out of 64-bit range after reduction");
    }
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d == 0 ? 1 : d);
  }

  static long long parse_integer(std::string_view text, std::size_t& pos) {
    bool negative = false;
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    i128 value = 0;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > i128(std::numeric_limits<long long>::max())) {
        raise(Errc::overflow, "integer literal out of range");
      }
      ++pos;
      ++digits;
    }
    if (digits == 0) {
      raise(Errc::invalid_value,
            "expected integer at offset " + std::to_string(start) + " in '" + std::string(text) + "'");
    }
    if (pos < text.size() && text[pos] == '.') {
      raise(Errc::invalid_value, "decimal notation rejected, use p/q: '" + std::string(text) + "'");
    }
    long long v = static_cast<long long>(value);
    return negative ? -v : v;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline bool in_unit_interval(const Rational& r) {
  return r >= Rational(0) && r <= Rational(1);
}

}  // namespace domval
