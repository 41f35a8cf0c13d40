#pragma once

// Elements of Q/Z, i.e. exact phases e^{2 pi i p/q}.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

class QZ {
 public:
  constexpr QZ() = default;
  constexpr QZ(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("QZ: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }

  /// Representative in [0, 1) as a double.
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr QZ operator+(QZ a, QZ b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return QZ(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
  }
  friend constexpr QZ operator-(QZ a) { return QZ(-a.num_, a.den_); }
  friend constexpr QZ operator-(QZ a, QZ b) { return a + (-b); }
  friend constexpr QZ operator*(std::int64_t m, QZ a) { return QZ((m % a.den_) * a.num_, a.den_); }
  QZ& operator+=(QZ b) { return *this = *this + b; }

  friend constexpr bool operator==(const QZ&, const QZ&) = default;
  /// Orders by the representative in [0, 1).
  friend constexpr std::strong_ordering operator<=>(const QZ& a, const QZ& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p/q" or an integer "p".
  static QZ parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return QZ(std::stoll(std::string(s)), 1);
      return QZ(std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1))));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("QZ: cannot parse '" + std::string(s) + "'");
    }
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mtc
