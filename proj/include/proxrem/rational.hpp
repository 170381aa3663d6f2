#pragma once

// Exact rational numbers over 64-bit integers.
//
// Every arithmetic result is computed in 128-bit intermediates, reduced, and
// checked to fit back into 64 bits; anything that does not fit throws
// std::overflow_error instead of wrapping. Bound verification depends on
// comparisons never being approximate, so there is no floating point here
// apart from the explicit to_double() used for human-readable output.

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace proxrem {

class Rational {
 public:
  __extension__ using wide_t = __int128;

  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
  constexpr Rational(std::int64_t num, std::int64_t den) { *this = reduce(num, den); }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not exceeding the value.
  constexpr std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q" form; the denominator is always written, also for integers.
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p/q" or a bare integer "p", optional leading sign.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto read = [](std::string_view s) -> std::int64_t {
      if (s.empty()) throw std::invalid_argument("empty rational component");
      std::size_t i = 0;
      bool neg = false;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw std::invalid_argument("rational component has no digits");
      wide_t v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
          throw std::invalid_argument("invalid character in rational: '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (v > std::numeric_limits<std::int64_t>::max())
          throw std::overflow_error("rational component out of range");
      }
      return static_cast<std::int64_t>(neg ? -v : v);
    };
    if (slash == std::string_view::npos) return Rational(read(text));
    return Rational(read(text.substr(0, slash)), read(text.substr(slash + 1)));
  }

  constexpr Rational operator-() const { return from_wide(-wide_t{num_}, den_); }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide_t{a.num_} + b.num_, a.den_);
    return from_wide(wide_t{a.num_} * b.den_ + wide_t{b.num_} * a.den_, wide_t{a.den_} * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide_t{a.num_} - b.num_, a.den_);
    return from_wide(wide_t{a.num_} * b.den_ - wide_t{b.num_} * a.den_, wide_t{a.den_} * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide_t{a.num_} * b.num_, wide_t{a.den_} * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(wide_t{a.num_} * b.den_, wide_t{a.den_} * b.num_);
  }

  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
  constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
  constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return wide_t{a.num_} * b.den_ <=> wide_t{b.num_} * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr wide_t gcd(wide_t a, wide_t b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr Rational reduce(std::int64_t num, std::int64_t den) {
    return from_wide(num, den);
  }

  static constexpr Rational from_wide(wide_t num, wide_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    wide_t g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    constexpr wide_t hi = std::numeric_limits<std::int64_t>::max();
    constexpr wide_t lo = -hi;
    if (num > hi || num < lo || den > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace proxrem
