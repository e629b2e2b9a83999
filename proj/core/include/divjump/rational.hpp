#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divjump {

// Exact rational arithmetic on 64-bit numerator/denominator. Every value is
// kept in lowest terms with a positive denominator, so equality and ordering
// are plain integer comparisons. Overflow throws instead of wrapping; the
// quantities in this project (utilities, welfare sums, potentials) stay far
// below the 64-bit range, so a throw here always indicates a bug.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) {
    __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    assign128(n, i128(den_) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    assign128(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    assign128(i128(num_) * o.den_, i128(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = i128(a.num_) * b.den_;
    __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Serialized form is always "p/q", including integers ("4/1").
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(std::stoll(std::string(text)));
      }
      std::int64_t n = std::stoll(std::string(text.substr(0, slash)));
      std::int64_t d = std::stoll(std::string(text.substr(slash + 1)));
      return Rational(n, d);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    num_ = num;
    den_ = den;
  }

  void assign128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr __int128 kMax = INT64_MAX;
    constexpr __int128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax) {
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace divjump
