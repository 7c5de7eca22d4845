#pragma once

#include <string>
#include <variant>

#include "fictio/errors.hpp"
#include "fictio/rational.hpp"

namespace fictio {

enum class Mode { Exact, Float };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

/// A series coefficient: exact rational or binary64.
/// Arithmetic between mismatched tags throws ModeMismatch.
class Coefficient {
 public:
  Coefficient() : v_(Rational(0)) {}
  Coefficient(Rational q) : v_(std::move(q)) {}  // NOLINT: implicit by design
  Coefficient(double x) : v_(x) {}               // NOLINT: implicit by design

  static Coefficient zero(Mode m) {
    return m == Mode::Exact ? Coefficient(Rational(0)) : Coefficient(0.0);
  }
  static Coefficient one(Mode m) {
    return m == Mode::Exact ? Coefficient(Rational(1)) : Coefficient(1.0);
  }

  Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::Exact : Mode::Float; }
  bool is_zero() const {
    return mode() == Mode::Exact ? std::get<Rational>(v_).is_zero() : std::get<double>(v_) == 0.0;
  }
  int sign() const;

  const Rational& rational() const {
    if (mode() != Mode::Exact) throw ModeMismatch("expected an exact coefficient");
    return std::get<Rational>(v_);
  }
  double float64() const {
    if (mode() != Mode::Float) throw ModeMismatch("expected a float coefficient");
    return std::get<double>(v_);
  }
  /// Lossy escape hatch: value as binary64 regardless of tag.
  double to_double() const {
    return mode() == Mode::Exact ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
  }

  Coefficient abs() const;
  Coefficient inverse() const;
  std::string to_string() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

 private:
  static void require_same_mode(const Coefficient& a, const Coefficient& b) {
    if (a.mode() != b.mode()) throw ModeMismatch();
  }
  std::variant<Rational, double> v_;
};

/// Shortest decimal string that round-trips through binary64.
std::string float_to_string(double x);

}  // namespace fictio
