#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fictio/coefficient.hpp"

namespace fictio {

enum class Ordering { LT, EQ, GT };

struct Term {
  int exp;
  Coefficient coeff;
};

inline bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }

/// Truncated generalized Laurent series in a single infinitesimal eps:
/// a finite sum of terms c_k * eps^k over integer exponents k. Exponent 0
/// carries the assignable (appreciable) part, positive exponents are
/// infinitesimal orders (eps = dx, eps^2 = dx^2, ...), negative exponents
/// are infinite orders. Stored exponents always lie in [ord, ord + window);
/// arithmetic re-applies the window relative to the result's own leading
/// order, which keeps ord exact under multiplication and inversion.
///
/// Values are immutable after construction; every operation is a pure
/// function returning a fresh value, so LCNumbers are safe to share across
/// threads.
class LCNumber {
 public:
  static constexpr int kDefaultWindow = 16;
  /// ord() of the zero value; never a stored exponent.
  static constexpr int kInfiniteOrd = std::numeric_limits<int>::max();

  enum class Class { Zero, Infinitesimal, Appreciable, Infinite };

  LCNumber() : mode_(Mode::Exact), window_(kDefaultWindow), lossy_(false) {}

  static LCNumber zero(Mode mode = Mode::Exact, int window = kDefaultWindow);
  static LCNumber one(Mode mode = Mode::Exact, int window = kDefaultWindow);
  static LCNumber from_rational(const Rational& q, int window = kDefaultWindow);
  static LCNumber from_double(double x, int window = kDefaultWindow);
  static LCNumber from_coefficient(const Coefficient& c, int window = kDefaultWindow);
  /// eps^k for k >= 1; rejects k < 1.
  static LCNumber eps(int k = 1, Mode mode = Mode::Exact, int window = kDefaultWindow);
  static LCNumber monomial(int exp, const Coefficient& c, int window = kDefaultWindow);

  Mode mode() const { return mode_; }
  int window() const { return window_; }
  /// True when some arithmetic step truncated nonzero terms away; this is
  /// finite-precision loss, distinct from terms discarded by normalization.
  bool lossy() const { return lossy_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimum stored exponent; kInfiniteOrd for zero.
  int ord() const { return terms_.empty() ? kInfiniteOrd : terms_.front().exp; }
  Class classify() const;
  /// Coefficient at `exp`, zero (of the right mode) when absent.
  Coefficient coeff(int exp) const;
  Coefficient leading_coeff() const;
  const std::vector<Term>& terms() const { return terms_; }

  LCNumber operator-() const;
  friend LCNumber operator+(const LCNumber& a, const LCNumber& b);
  friend LCNumber operator-(const LCNumber& a, const LCNumber& b);
  friend LCNumber operator*(const LCNumber& a, const LCNumber& b);
  /// Multiplicative inverse through the window; exact for monomials,
  /// otherwise the truncated geometric series (flagged lossy).
  LCNumber inverse() const;
  friend LCNumber operator/(const LCNumber& a, const LCNumber& b);
  LCNumber pow(long k) const;
  /// Scalar multiple; the scalar must match the value's mode.
  LCNumber scale(const Coefficient& c) const;
  /// Copy with the lossy flag set; for operations whose true result
  /// continues past the window (inversion, builtin expansions).
  LCNumber marked_lossy() const;

  /// Total order: sign of a - b read off the lowest-exponent coefficient.
  /// In float mode, leading coefficients within 2^-40 relative of each
  /// other raise IndeterminateComparison.
  static Ordering cmp(const LCNumber& a, const LCNumber& b);
  friend bool operator<(const LCNumber& a, const LCNumber& b) { return cmp(a, b) == Ordering::LT; }
  friend bool operator>(const LCNumber& a, const LCNumber& b) { return cmp(a, b) == Ordering::GT; }
  friend bool operator<=(const LCNumber& a, const LCNumber& b) { return cmp(a, b) != Ordering::GT; }
  friend bool operator>=(const LCNumber& a, const LCNumber& b) { return cmp(a, b) != Ordering::LT; }

  /// Structural value equality (mode and term map); window and lossy flag
  /// are precision metadata and do not participate.
  friend bool operator==(const LCNumber& a, const LCNumber& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LCNumber& a, const LCNumber& b) { return !(a == b); }

  /// Canonical text form, e.g. "3 + 2*eps - 1/2*eps^3", "eps^-2", "0".
  /// Terms are sorted by increasing exponent. Round-trips through parse()
  /// in exact mode.
  std::string to_string() const;
  static LCNumber parse(std::string_view text, Mode mode = Mode::Exact,
                        int window = kDefaultWindow);

 private:
  LCNumber(Mode mode, int window, std::vector<Term> terms, bool lossy);
  void normalize();

  Mode mode_;
  int window_;
  bool lossy_;
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

const char* classify_name(LCNumber::Class c);

}  // namespace fictio
