#pragma once

#include <optional>
#include <vector>

#include "fictio/lc_number.hpp"

namespace fictio {

/// Which rule justified the discards recorded in a trace.
struct TlhJustification {
  enum class Kind { LeadingOrder, RelativeToScale };
  Kind kind = Kind::LeadingOrder;
  int scale_ord = 0;  // meaningful for RelativeToScale
};

/// Audit record of a homogeneity normalization:
/// kept + sum(discarded) == input exactly (exact mode), and every discarded
/// exponent is strictly above every kept exponent.
struct TlhTrace {
  LCNumber input;
  LCNumber kept;
  std::vector<Term> discarded;  // increasing exponent order
  TlhJustification justification;
};

/// Law-of-homogeneity normalization: keep only the single leading term
/// (the term of lowest order); tlh(0) = 0.
LCNumber tlh(const LCNumber& a);

/// Drop every term of `a` whose exponent exceeds ord(scale); keep the rest.
/// Rejects scale = 0.
LCNumber tlh_relative(const LCNumber& a, const LCNumber& scale);

/// Normalization with an audit trail. Without a scale the justification is
/// LeadingOrder and kept == tlh(a); with a scale it is RelativeToScale and
/// kept == tlh_relative(a, scale).
TlhTrace tlh_trace(const LCNumber& a, const std::optional<LCNumber>& scale = std::nullopt);

/// Generalized equality ("equality up to"): true iff a == b, or the
/// difference a - b is nonzero and of strictly higher order than both
/// sides, i.e. incomparably smaller than each of them.
bool gen_equal(const LCNumber& a, const LCNumber& b);

}  // namespace fictio
