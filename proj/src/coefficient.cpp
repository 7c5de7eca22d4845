#include "fictio/coefficient.hpp"

#include <charconv>
#include <cmath>

namespace fictio {

std::string float_to_string(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

int Coefficient::sign() const {
  if (mode() == Mode::Exact) return std::get<Rational>(v_).sign();
  double x = std::get<double>(v_);
  if (x > 0.0) return 1;
  if (x < 0.0) return -1;
  return 0;
}

Coefficient Coefficient::abs() const {
  if (mode() == Mode::Exact) return Coefficient(std::get<Rational>(v_).abs());
  return Coefficient(std::fabs(std::get<double>(v_)));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
  if (mode() == Mode::Exact) return Coefficient(std::get<Rational>(v_).inverse());
  return Coefficient(1.0 / std::get<double>(v_));
}

std::string Coefficient::to_string() const {
  if (mode() == Mode::Exact) return std::get<Rational>(v_).to_string();
  return float_to_string(std::get<double>(v_));
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  Coefficient::require_same_mode(a, b);
  if (a.mode() == Mode::Exact) return Coefficient(a.rational() + b.rational());
  return Coefficient(a.float64() + b.float64());
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  Coefficient::require_same_mode(a, b);
  if (a.mode() == Mode::Exact) return Coefficient(a.rational() - b.rational());
  return Coefficient(a.float64() - b.float64());
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient::require_same_mode(a, b);
  if (a.mode() == Mode::Exact) return Coefficient(a.rational() * b.rational());
  return Coefficient(a.float64() * b.float64());
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  Coefficient::require_same_mode(a, b);
  if (b.is_zero()) throw DivisionByZero();
  if (a.mode() == Mode::Exact) return Coefficient(a.rational() / b.rational());
  return Coefficient(a.float64() / b.float64());
}

Coefficient Coefficient::operator-() const {
  if (mode() == Mode::Exact) return Coefficient(-std::get<Rational>(v_));
  return Coefficient(-std::get<double>(v_));
}

}  // namespace fictio
