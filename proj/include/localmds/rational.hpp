#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace localmds {

/// Exact rational number on 64-bit numerator/denominator.
///
/// All graph weights and density bounds in this library are rationals so
/// that the inequalities asserted by the test suites hold without floating
/// point tolerance. Intermediate products are computed in 128 bits and an
/// overflow of the reduced result throws instead of wrapping.
class Rat {
public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  /// Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Renders as "num/den", e.g. "3/2", "2/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
  }

private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr i128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("Rat: value out of 64-bit range");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace localmds
