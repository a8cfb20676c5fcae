#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyplab {

using i128 = __int128;

std::string to_string(i128 v);

// Exact rational arithmetic on 128-bit integers. The remainder-term checks
// compare |A_d| - x*g(d) against g(d)*d exactly; floating point is banned
// there. Magnitudes in every code path stay far below the 128-bit range,
// but the arithmetic stays overflow-checked anyway.
class Rational {
 public:
  Rational() = default;
  Rational(i128 n) : num_(n) {}  // NOLINT: implicit from integers is the point
  Rational(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(add(mul(num_, o.den_), mul(o.num_, den_)), mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(add(mul(num_, o.den_), -mul(o.num_, den_)), mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(mul(num_, o.num_), mul(den_, o.den_));
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mul(num_, o.den_) < mul(o.num_, den_); }
  bool operator<=(const Rational& o) const { return mul(num_, o.den_) <= mul(o.num_, den_); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    return den_ == 1 ? hyplab::to_string(num_)
                     : hyplab::to_string(num_) + "/" + hyplab::to_string(den_);
  }

 private:
  static i128 add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational add");
    return r;
  }
  static i128 mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational mul");
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    i128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  i128 num_ = 0;
  i128 den_ = 1;  // > 0, coprime to num_
};

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Peel digits from |v|; negate digit-wise to survive INT128_MIN.
  std::string s;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    if (d < 0) d = -d;
    s.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

}  // namespace hyplab
