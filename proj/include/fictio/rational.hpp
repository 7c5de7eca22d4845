#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "fictio/errors.hpp"

namespace fictio {

/// Exact rational number: arbitrary-precision numerator and positive
/// arbitrary-precision denominator, always reduced to lowest terms.
/// The canonical zero is 0/1. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den);

  /// Accepts "p", "p/q", and decimal forms like "2.5" or "1e-3" (all exact).
  static Rational from_string(std::string_view text);
  /// 2^k, k may be negative.
  static Rational pow2(int k);
  static Rational factorial(unsigned long n);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;
  Rational inverse() const;  // throws DivisionByZero on zero
  Rational pow(long k) const;
  Rational floor() const;
  /// Floor as a machine integer; throws Error if it does not fit.
  long floor_to_long() const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  std::string numerator_string() const { return v_.get_num().get_str(); }
  std::string denominator_string() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace fictio
