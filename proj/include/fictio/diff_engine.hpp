#pragma once

#include <utility>

#include "fictio/expr.hpp"
#include "fictio/tlh.hpp"

namespace fictio {

/// Raised when a difference quotient has an infinite leading order; carries
/// the raw quotient instead of inventing a sentinel slope.
class VerticalTangent : public Error {
 public:
  explicit VerticalTangent(LCNumber raw)
      : Error("vertical tangent: raw quotient " + raw.to_string() + " is infinite"),
        raw_(std::move(raw)) {}
  const LCNumber& raw_quotient() const { return raw_; }

 private:
  LCNumber raw_;
};

/// Result of a direct (infinitesimal) differentiation. The raw quotient is
/// the full inassignable value of dy/dx; the derivative is its assignable
/// exponent-0 coefficient; the trace records the infinitesimal tail that
/// homogeneity normalization discards. raw_quotient - derivative is always
/// infinitesimal or zero.
struct DerivReport {
  ExprPtr expr;
  Coefficient point;
  LCNumber raw_quotient;
  Coefficient derivative;
  TlhTrace trace;
  Mode mode = Mode::Exact;
};

struct TangentLine {
  Coefficient slope;
  Coefficient intercept;
  std::pair<Coefficient, Coefficient> touch_point;  // (x0, f(x0)), on the line exactly
};

/// Derivative by the direct method: form the quotient
/// (f(x0 + eps) - f(x0)) / eps in LC arithmetic, then normalize. The
/// increment is always the canonical eps.
DerivReport differentiate(const ExprPtr& e, const Rational& x0, Mode mode,
                          int window = LCNumber::kDefaultWindow);

/// k-th derivative via Taylor-coefficient extraction: k! * coeff_k of
/// f(x0 + eps). Requires k >= 1 and k < window.
Coefficient higher_derivative(const ExprPtr& e, const Rational& x0, int k, Mode mode,
                              int window = LCNumber::kDefaultWindow);

/// The line through the two infinitely close points (x0, f(x0)) and
/// (x0 + eps, f(x0 + eps)).
TangentLine tangent_line(const ExprPtr& e, const Rational& x0, Mode mode,
                         int window = LCNumber::kDefaultWindow);

/// True iff the slope formed from (x0, x0 + eps) and the slope formed from
/// (x0 + eps, x0) are generically equal with identical normalizations:
/// the two points of the tangent construction enter symmetrically.
bool point_symmetry_check(const ExprPtr& e, const Rational& x0, Mode mode,
                          int window = LCNumber::kDefaultWindow);

}  // namespace fictio
