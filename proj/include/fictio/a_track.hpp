#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fictio/diff_engine.hpp"

namespace fictio {

/// Raised when the finite-difference schedule does not settle.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::vector<std::pair<Coefficient, Coefficient>> schedule)
      : Error(what), schedule_(std::move(schedule)) {}
  const std::vector<std::pair<Coefficient, Coefficient>>& schedule() const { return schedule_; }

 private:
  std::vector<std::pair<Coefficient, Coefficient>> schedule_;
};

struct EpsDeltaPair {
  double epsilon;
  Coefficient delta;  // a schedule step h_n
};

/// Finite-difference limit evidence on the schedule h_n = 2^-n. The
/// eps-delta pairs are certificates by evaluation, not proofs: each stored
/// pair was re-checked by direct evaluation at sample h below delta. The
/// whole certificate speaks only about ordinary numbers; it carries no
/// analogue of a discarded infinitesimal tail.
struct LimitCertificate {
  Coefficient target;      // the limit estimate
  std::vector<std::pair<Coefficient, Coefficient>> schedule;  // (h_n, quotient)
  Coefficient richardson;  // one-level extrapolation; equals target
  std::vector<EpsDeltaPair> eps_delta_pairs;
  Mode mode = Mode::Exact;
};

enum class TrackVerdict { ExactMatch, WithinTolerance, Mismatch };

const char* track_verdict_name(TrackVerdict v);

/// Side-by-side record of the direct (infinitesimal) computation and the
/// Archimedean oracles. ExactMatch occurs only in exact mode with
/// identical rationals.
struct TrackComparison {
  DerivReport b_result;
  ExprPtr a_symbolic_expr;
  Coefficient a_symbolic;
  std::optional<LimitCertificate> a_limit;
  TrackVerdict verdict = TrackVerdict::Mismatch;
  double tolerance = 0.0;  // 0 in exact mode
};

inline constexpr double kTrackTolerance = 1e-9;

/// Sum/product/quotient/chain/power rules plus the shared builtin table.
ExprPtr symbolic_derivative(const ExprPtr& e);

/// Difference quotients on h_n = 2^-n for n = 1..n_max with one level of
/// Richardson extrapolation; fills eps-delta pairs for epsilon in
/// {1e-3, 1e-6, 1e-9} where achievable.
LimitCertificate limit_derivative(const ExprPtr& e, const Rational& x0, int n_max, Mode mode);

inline constexpr int kDefaultLimitSteps = 30;

/// In exact mode the B-track derivative must equal the symbolic oracle
/// exactly; in float mode it must sit within 1e-9 relative of both the
/// symbolic and the limit oracle.
TrackComparison compare_tracks(const ExprPtr& e, const Rational& x0, Mode mode,
                               int window = LCNumber::kDefaultWindow);

}  // namespace fictio
