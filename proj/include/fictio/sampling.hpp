#pragma once

#include <cstdint>
#include <random>

#include "fictio/lc_number.hpp"

namespace fictio {

/// Deterministic sampling helper. mt19937_64 output is pinned by the
/// standard; the derived draws below avoid std::uniform_*_distribution,
/// whose results vary between standard library implementations, so sample
/// sets are byte-stable across platforms for a fixed seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long uniform_long(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1p-53; }

  bool chance(double p) { return uniform_unit() < p; }

  /// Random nonzero rational with |numerator| <= max_num, denominator <= max_den.
  Rational rational(long max_num, long max_den, bool allow_zero = false) {
    while (true) {
      Rational q(uniform_long(-max_num, max_num), uniform_long(1, max_den));
      if (allow_zero || !q.is_zero()) return q;
    }
  }

  Rational positive_rational(long max_num, long max_den) {
    return Rational(uniform_long(1, max_num), uniform_long(1, max_den));
  }

  /// Random exact LC number with up to `max_terms` terms, exponents in
  /// [exp_lo, exp_hi], coefficients p/q with |p| <= max_num, q <= max_den.
  LCNumber lc_number(int exp_lo, int exp_hi, int max_terms, long max_num, long max_den,
                     int window = LCNumber::kDefaultWindow) {
    LCNumber acc = LCNumber::zero(Mode::Exact, window);
    int n = static_cast<int>(uniform_long(0, max_terms));
    for (int i = 0; i < n; ++i) {
      int exp = static_cast<int>(uniform_long(exp_lo, exp_hi));
      acc = acc + LCNumber::monomial(exp, Coefficient(rational(max_num, max_den)), window);
    }
    return acc;
  }

  LCNumber nonzero_lc_number(int exp_lo, int exp_hi, int max_terms, long max_num, long max_den,
                             int window = LCNumber::kDefaultWindow) {
    while (true) {
      LCNumber x = lc_number(exp_lo, exp_hi, max_terms, max_num, max_den, window);
      if (!x.is_zero()) return x;
    }
  }

  /// Random positive exact LC number: positive leading coefficient, any
  /// trailing coefficients.
  LCNumber positive_lc_number(int exp_lo, int exp_hi, int max_terms, long max_num, long max_den,
                              int window = LCNumber::kDefaultWindow) {
    int lead = static_cast<int>(uniform_long(exp_lo, exp_hi));
    LCNumber acc = LCNumber::monomial(lead, Coefficient(positive_rational(max_num, max_den)), window);
    int extra = static_cast<int>(uniform_long(0, max_terms - 1));
    for (int i = 0; i < extra; ++i) {
      int exp = static_cast<int>(uniform_long(lead + 1, exp_hi + max_terms));
      acc = acc + LCNumber::monomial(exp, Coefficient(rational(max_num, max_den)), window);
    }
    return acc;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fictio
