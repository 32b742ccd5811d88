#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tracediv/error.hpp"

namespace tracediv {

// Element of (1/(p-1))*Z>=0 extended by two markers:
//   AtLeast(c) -- the value is >= c but truncated arithmetic cannot resolve it;
//   Infinite   -- symbolically known zero (empty sum, zero code).
// Finite values and AtLeast caps are exact rationals num/den, den >= 1.
// AtLeast(c) orders strictly above every finite value < c and above finite(c).
class Valuation {
 public:
  enum class Kind { Finite, AtLeast, Infinite };

  Valuation() : Valuation(finite(0)) {}

  static Valuation finite(long long num, long long den = 1) { return Valuation(Kind::Finite, num, den); }
  static Valuation at_least(long long num, long long den = 1) { return Valuation(Kind::AtLeast, num, den); }
  static Valuation infinite() { return Valuation(Kind::Infinite, 0, 1); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_at_least() const { return kind_ == Kind::AtLeast; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Only meaningful for finite values with den dividing num.
  long long integer() const {
    if (!is_finite() || num_ % den_ != 0) fail(ErrorCode::ConfigError, "valuation is not an integer: " + str());
    return num_ / den_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::Infinite) return true;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.kind_ == Kind::Infinite) return false;
    if (b.kind_ == Kind::Infinite) return true;
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs != rhs) return lhs < rhs;
    // Equal rational part: a finite value sits just below an AtLeast marker.
    return a.kind_ == Kind::Finite && b.kind_ == Kind::AtLeast;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  // AtLeast never silently becomes finite: finite + at_least = at_least.
  Valuation operator+(const Valuation& other) const {
    if (is_infinite() || other.is_infinite()) return infinite();
    const long long g = std::gcd(den_, other.den_);
    const long long den = den_ / g * other.den_;
    const long long num = num_ * (other.den_ / g) + other.num_ * (den_ / g);
    const Kind kind = (is_at_least() || other.is_at_least()) ? Kind::AtLeast : Kind::Finite;
    return Valuation(kind, num, den);
  }

  Valuation plus_integer(long long v) const {
    if (is_infinite()) return *this;
    return Valuation(kind_, num_ + v * den_, den_);
  }

  static const Valuation& min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

  std::string str() const {
    switch (kind_) {
      case Kind::Infinite:
        return "inf";
      case Kind::AtLeast:
        return ">=" + rational_str();
      case Kind::Finite:
        return rational_str();
    }
    return {};
  }

 private:
  Valuation(Kind kind, long long num, long long den) : kind_(kind), num_(num), den_(den) {
    if (den_ <= 0) fail(ErrorCode::ConfigError, "valuation denominator must be positive");
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::string rational_str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Kind kind_;
  long long num_;
  long long den_;
};

}  // namespace tracediv
