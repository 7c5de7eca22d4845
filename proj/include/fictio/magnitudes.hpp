#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fictio/lc_number.hpp"
#include "fictio/tlh.hpp"

namespace fictio {

// ---------------------------------------------------------------------------
// Comparability of LC numbers (exact decisions).

/// True iff some finite multiple of each exceeds the other; for positive LC
/// numbers this is exactly ord(x) == ord(y). Rejects non-positive inputs.
bool comparable(const LCNumber& x, const LCNumber& y);

/// x < y with no finite multiple of x exceeding y; exactly ord(x) > ord(y).
bool incomparably_smaller(const LCNumber& x, const LCNumber& y);

// ---------------------------------------------------------------------------
// Bounded witness search.

struct WitnessOutcome {
  enum class Kind { Witness, NoneUpTo, ProvenNegative };
  Kind kind = Kind::NoneUpTo;
  long n = 0;  // smallest multiplier, for Witness
  long bound = 0;

  bool found() const { return kind == Kind::Witness; }
  friend bool operator==(const WitnessOutcome& a, const WitnessOutcome& b) {
    return a.kind == b.kind && a.n == b.n && a.bound == b.bound;
  }
};

/// An ordered additive structure with a strict total order and a finite
/// sample set for bounded checking. Optional capabilities (subtraction,
/// exact n-th parts, fourth proportionals, exact witness decisions) are
/// probed per model.
template <class M>
concept MagnitudeModel = requires(const M& m, const typename M::Element& x,
                                  const typename M::Element& y) {
  typename M::Element;
  { m.add(x, y) } -> std::same_as<typename M::Element>;
  { m.less(x, y) } -> std::same_as<bool>;
  { m.to_string(x) } -> std::convertible_to<std::string>;
  { m.samples() } -> std::convertible_to<const std::vector<typename M::Element>&>;
};

template <class M>
concept HasSubtract = requires(const M& m, const typename M::Element& x,
                               const typename M::Element& y) {
  { m.subtract(y, x) } -> std::same_as<typename M::Element>;
};

template <class M>
concept HasNthPart = requires(const M& m, const typename M::Element& x, long n) {
  { m.exact_nth_part(x, n) } -> std::same_as<typename M::Element>;
};

template <class M>
concept HasFourthProportional = requires(const M& m, const typename M::Element& x,
                                         const typename M::Element& y,
                                         const typename M::Element& z) {
  { m.fourth_proportional(x, y, z) } -> std::same_as<typename M::Element>;
  { m.proportion_holds(x, y, z, z) } -> std::same_as<bool>;
};

template <class M>
concept HasExactWitness = requires(const M& m, const typename M::Element& x,
                                   const typename M::Element& y, long bound) {
  { m.exact_witness(x, y, bound) } -> std::same_as<WitnessOutcome>;
};

template <MagnitudeModel M>
bool elements_equal(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return !m.less(a, b) && !m.less(b, a);
}

/// The direct loop: accumulate x and compare against y, n = 1..bound.
/// This is the reference oracle; exact decisions must agree with it.
template <MagnitudeModel M>
WitnessOutcome archimedean_witness_naive(const M& m, const typename M::Element& x,
                                         const typename M::Element& y, long bound) {
  typename M::Element acc = x;
  for (long n = 1; n <= bound; ++n) {
    if (n > 1) acc = m.add(acc, x);
    if (m.less(y, acc)) return {WitnessOutcome::Kind::Witness, n, bound};
  }
  return {WitnessOutcome::Kind::NoneUpTo, 0, bound};
}

/// Witness search with the model's exact decision when available; a
/// NoneUpTo from the bounded loop is upgraded to a proven negative only by
/// such a capability.
template <MagnitudeModel M>
WitnessOutcome archimedean_witness(const M& m, const typename M::Element& x,
                                   const typename M::Element& y, long bound) {
  if constexpr (HasExactWitness<M>) {
    return m.exact_witness(x, y, bound);
  } else {
    return archimedean_witness_naive(m, x, y, bound);
  }
}

// ---------------------------------------------------------------------------
// Bulk witness scans. The pairwise searches are independent; the parallel
// kernel distributes them across OpenMP threads and assembles results in
// index order, so reports are deterministic regardless of thread count.
// The serial variant is the reference implementation kept for testing.

template <MagnitudeModel M>
using ElementPairs = std::vector<std::pair<typename M::Element, typename M::Element>>;

template <MagnitudeModel M>
std::vector<WitnessOutcome> witness_scan_serial(const M& m, const ElementPairs<M>& pairs,
                                                long bound, bool use_exact_decisions) {
  std::vector<WitnessOutcome> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i] = use_exact_decisions ? archimedean_witness(m, pairs[i].first, pairs[i].second, bound)
                                 : archimedean_witness_naive(m, pairs[i].first, pairs[i].second, bound);
  }
  return out;
}

template <MagnitudeModel M>
std::vector<WitnessOutcome> witness_scan_parallel(const M& m, const ElementPairs<M>& pairs,
                                                  long bound, bool use_exact_decisions) {
  std::vector<WitnessOutcome> out(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i] = use_exact_decisions ? archimedean_witness(m, pairs[i].first, pairs[i].second, bound)
                                 : archimedean_witness_naive(m, pairs[i].first, pairs[i].second, bound);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checking.

enum class Axiom { E1, E2, E3, E4, E5 };

const char* axiom_name(Axiom a);

enum class Verdict { Holds, Fails, Unknown };

const char* verdict_name(Verdict v);

struct ReportEntry {
  std::vector<std::string> elements;
  std::optional<long> n;             // certifying multiplier, when applicable
  std::optional<std::string> extra;  // z for E2, the part for E4, v for E5
  std::string kind;                  // "witness", "proven_negative", ...
};

/// Outcome of checking one axiom over a model's sample set. A Holds on a
/// generative model is relative to the samples and the bound (the note
/// says so); Fails always carries at least one counterexample.
struct AxiomReport {
  Axiom axiom = Axiom::E1;
  Verdict verdict = Verdict::Unknown;
  long bound = 0;
  std::size_t checked = 0;
  std::vector<ReportEntry> witnesses;
  std::vector<ReportEntry> counterexamples;
  std::string note;
};

inline constexpr long kDefaultWitnessBound = 100000;
inline constexpr std::size_t kMaxListedEntries = 8;

namespace detail {

template <MagnitudeModel M>
AxiomReport check_e1(const M& m, long bound) {
  AxiomReport report;
  report.axiom = Axiom::E1;
  report.bound = bound;
  const auto& xs = m.samples();
  ElementPairs<M> pairs;
  pairs.reserve(xs.size() * xs.size());
  for (const auto& x : xs)
    for (const auto& y : xs) pairs.emplace_back(x, y);
  std::vector<WitnessOutcome> outcomes = witness_scan_parallel(m, pairs, bound, true);
  report.checked = pairs.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const WitnessOutcome& w = outcomes[i];
    if (w.found()) {
      if (report.witnesses.size() < kMaxListedEntries) {
        report.witnesses.push_back({{m.to_string(x), m.to_string(y)}, w.n, std::nullopt, "witness"});
      }
    } else {
      bool proven = w.kind == WitnessOutcome::Kind::ProvenNegative;
      if (report.counterexamples.size() < kMaxListedEntries) {
        report.counterexamples.push_back({{m.to_string(x), m.to_string(y)},
                                          std::nullopt,
                                          std::nullopt,
                                          proven ? "proven_negative" : "no_witness_up_to_bound"});
      }
      report.verdict = Verdict::Fails;
    }
  }
  if (report.verdict != Verdict::Fails) {
    report.verdict = Verdict::Holds;
    report.note = "relative to " + std::to_string(xs.size()) + " samples and bound " +
                  std::to_string(bound);
  }
  return report;
}

template <MagnitudeModel M>
AxiomReport check_e2(const M& m, long bound) {
  AxiomReport report;
  report.axiom = Axiom::E2;
  report.bound = bound;
  const auto& xs = m.samples();
  bool unresolved = false;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (!m.less(x, y)) continue;
      ++report.checked;
      std::optional<typename M::Element> z;
      if constexpr (HasSubtract<M>) {
        typename M::Element cand = m.subtract(y, x);
        if (elements_equal(m, m.add(x, cand), y)) z = cand;
      }
      if (!z) {
        for (const auto& s : xs) {
          if (elements_equal(m, m.add(x, s), y)) {
            z = s;
            break;
          }
        }
      }
      if (z) {
        if (report.witnesses.size() < kMaxListedEntries) {
          report.witnesses.push_back(
              {{m.to_string(x), m.to_string(y)}, std::nullopt, m.to_string(*z), "witness"});
        }
      } else {
        unresolved = true;
      }
    }
  }
  report.verdict = unresolved ? Verdict::Unknown : Verdict::Holds;
  report.note = unresolved ? "no z found by subtraction or sample search for some pair"
                           : "relative to " + std::to_string(xs.size()) + " samples";
  return report;
}

template <MagnitudeModel M>
AxiomReport check_e3(const M& m, long bound) {
  AxiomReport report;
  report.axiom = Axiom::E3;
  report.bound = bound;
  const auto& xs = m.samples();
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (!m.less(x, y)) continue;
      for (const auto& z : xs) {
        ++report.checked;
        if (!m.less(m.add(x, z), m.add(y, z))) {
          report.verdict = Verdict::Fails;
          if (report.counterexamples.size() < kMaxListedEntries) {
            report.counterexamples.push_back(
                {{m.to_string(x), m.to_string(y), m.to_string(z)}, std::nullopt, std::nullopt,
                 "order_violation"});
          }
        } else if (report.witnesses.size() < kMaxListedEntries) {
          report.witnesses.push_back(
              {{m.to_string(x), m.to_string(y), m.to_string(z)}, std::nullopt, std::nullopt,
               "witness"});
        }
      }
    }
  }
  if (report.verdict != Verdict::Fails) {
    report.verdict = Verdict::Holds;
    report.note = "relative to " + std::to_string(xs.size()) + " samples";
  }
  return report;
}

template <MagnitudeModel M>
AxiomReport check_e4(const M& m, long bound) {
  AxiomReport report;
  report.axiom = Axiom::E4;
  report.bound = bound;
  const auto& xs = m.samples();
  const long n_max = std::min<long>(12, bound);
  bool unresolved = false;
  for (const auto& x : xs) {
    for (long n = 1; n <= n_max; ++n) {
      ++report.checked;
      std::optional<typename M::Element> y;
      if constexpr (HasNthPart<M>) {
        y = m.exact_nth_part(x, n);
      } else {
        for (const auto& s : xs) {
          typename M::Element acc = s;
          for (long j = 1; j < n; ++j) acc = m.add(acc, s);
          if (elements_equal(m, acc, x)) {
            y = s;
            break;
          }
        }
      }
      if (!y) {
        unresolved = true;
        continue;
      }
      // Verify by iterated addition: n copies of y sum to x.
      typename M::Element acc = *y;
      for (long j = 1; j < n; ++j) acc = m.add(acc, *y);
      if (elements_equal(m, acc, x)) {
        if (report.witnesses.size() < kMaxListedEntries) {
          report.witnesses.push_back({{m.to_string(x)}, n, m.to_string(*y), "witness"});
        }
      } else {
        unresolved = true;
      }
    }
  }
  report.verdict = unresolved ? Verdict::Unknown : Verdict::Holds;
  report.note = unresolved
                    ? "n-th parts undecidable for some sample (no capability or search failure)"
                    : "relative to " + std::to_string(xs.size()) + " samples, n up to " +
                          std::to_string(n_max);
  return report;
}

template <MagnitudeModel M>
AxiomReport check_e5(const M& m, long bound) {
  AxiomReport report;
  report.axiom = Axiom::E5;
  report.bound = bound;
  const auto& xs = m.samples();
  if constexpr (HasFourthProportional<M>) {
    bool unresolved = false;
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        for (const auto& z : xs) {
          ++report.checked;
          typename M::Element v = m.fourth_proportional(x, y, z);
          if (m.proportion_holds(x, y, z, v)) {
            if (report.witnesses.size() < kMaxListedEntries) {
              report.witnesses.push_back({{m.to_string(x), m.to_string(y), m.to_string(z)},
                                          std::nullopt, m.to_string(v), "witness"});
            }
          } else {
            unresolved = true;
          }
        }
      }
    }
    report.verdict = unresolved ? Verdict::Unknown : Verdict::Holds;
    report.note = unresolved ? "supplied fourth proportional failed verification for some triple"
                             : "relative to " + std::to_string(xs.size()) + " samples";
  } else {
    report.verdict = Verdict::Unknown;
    report.note = "fourth-proportional capability not provided; not decidable by bounded search";
  }
  return report;
}

}  // namespace detail

template <MagnitudeModel M>
AxiomReport check_axiom(const M& m, Axiom axiom, long bound = kDefaultWitnessBound) {
  switch (axiom) {
    case Axiom::E1: return detail::check_e1(m, bound);
    case Axiom::E2: return detail::check_e2(m, bound);
    case Axiom::E3: return detail::check_e3(m, bound);
    case Axiom::E4: return detail::check_e4(m, bound);
    case Axiom::E5: return detail::check_e5(m, bound);
  }
  throw Error("unreachable axiom");
}

template <MagnitudeModel M>
std::vector<AxiomReport> check_all_axioms(const M& m, long bound = kDefaultWitnessBound) {
  return {check_axiom(m, Axiom::E1, bound), check_axiom(m, Axiom::E2, bound),
          check_axiom(m, Axiom::E3, bound), check_axiom(m, Axiom::E4, bound),
          check_axiom(m, Axiom::E5, bound)};
}

// ---------------------------------------------------------------------------
// Concrete models.

/// Positive rationals: the Archimedean base case. E1 witnesses are computed
/// exactly as floor(y/x) + 1.
class RationalsModel {
 public:
  using Element = Rational;

  explicit RationalsModel(std::vector<Rational> samples);
  static RationalsModel default_samples(std::uint64_t seed, std::size_t count = 16);

  Element add(const Element& a, const Element& b) const { return a + b; }
  bool less(const Element& a, const Element& b) const { return a < b; }
  std::string to_string(const Element& x) const { return x.to_string(); }
  const std::vector<Element>& samples() const { return samples_; }

  Element subtract(const Element& y, const Element& x) const { return y - x; }
  Element exact_nth_part(const Element& x, long n) const { return x / Rational(n); }
  Element fourth_proportional(const Element& x, const Element& y, const Element& z) const {
    return y * z / x;
  }
  bool proportion_holds(const Element& x, const Element& y, const Element& z,
                        const Element& v) const {
    return x * v == y * z;
  }
  WitnessOutcome exact_witness(const Element& x, const Element& y, long bound) const;

 private:
  std::vector<Element> samples_;
};

/// Positive LC numbers: the non-Archimedean instance. Witness questions are
/// decided exactly through the order grading, so a missing witness between
/// different orders is a proven negative, not merely bounded evidence.
class PositiveLCModel {
 public:
  using Element = LCNumber;

  explicit PositiveLCModel(std::vector<LCNumber> samples);
  /// Always includes eps and 1 (in that order) ahead of the random samples.
  static PositiveLCModel default_samples(std::uint64_t seed, std::size_t count = 16);

  Element add(const Element& a, const Element& b) const { return a + b; }
  bool less(const Element& a, const Element& b) const { return a < b; }
  std::string to_string(const Element& x) const { return x.to_string(); }
  const std::vector<Element>& samples() const { return samples_; }

  Element subtract(const Element& y, const Element& x) const { return y - x; }
  Element exact_nth_part(const Element& x, long n) const {
    return x.scale(Coefficient(Rational(1, n)));
  }
  Element fourth_proportional(const Element& x, const Element& y, const Element& z) const {
    return y * z / x;
  }
  bool proportion_holds(const Element& x, const Element& y, const Element& z,
                        const Element& v) const {
    return x * v == y * z;
  }
  WitnessOutcome exact_witness(const Element& x, const Element& y, long bound) const;

 private:
  std::vector<Element> samples_;
};

/// The angle between a circle and its tangent, against rectilinear angles:
/// ordered lexicographically by (rectilinear part, curvature part), added
/// componentwise. A pure horn element sits below every positive rectilinear
/// angle. Deliberately minimal: no multiplicative structure, no exact
/// witness decisions.
struct HornAngle {
  Rational rect;  // rectilinear part, >= 0
  Rational curv;  // curvature part; may be negative in differences

  HornAngle(Rational r, Rational c);
  bool is_positive() const;
  std::string to_string() const;

  friend HornAngle operator+(const HornAngle& a, const HornAngle& b) {
    return HornAngle(a.rect + b.rect, a.curv + b.curv);
  }
  friend bool operator<(const HornAngle& a, const HornAngle& b) {
    if (a.rect != b.rect) return a.rect < b.rect;
    return a.curv < b.curv;
  }
  friend bool operator==(const HornAngle& a, const HornAngle& b) {
    return a.rect == b.rect && a.curv == b.curv;
  }
};

Ordering horn_cmp(const HornAngle& a, const HornAngle& b);

/// Order- and addition-preserving embedding (r, c) -> r + c*eps.
LCNumber embed_horn(const HornAngle& h, int window = LCNumber::kDefaultWindow);

class HornModel {
 public:
  using Element = HornAngle;

  explicit HornModel(std::vector<HornAngle> samples);
  /// Always includes the pure horn (0, 1) and the unit rectilinear angle
  /// (1, 0) (in that order) ahead of the random samples.
  static HornModel default_samples(std::uint64_t seed, std::size_t count = 16);

  Element add(const Element& a, const Element& b) const { return a + b; }
  bool less(const Element& a, const Element& b) const { return a < b; }
  std::string to_string(const Element& x) const { return x.to_string(); }
  const std::vector<Element>& samples() const { return samples_; }

  Element subtract(const Element& y, const Element& x) const {
    return HornAngle(y.rect - x.rect, y.curv - x.curv);
  }
  Element exact_nth_part(const Element& x, long n) const {
    Rational d(n);
    return HornAngle(x.rect / d, x.curv / d);
  }

 private:
  std::vector<Element> samples_;
};

// ---------------------------------------------------------------------------
// Horn-angle demonstration.

struct HornDemoReport {
  std::size_t sampled_acute = 0;      // rectilinear angles sampled
  bool horn_below_all = false;        // (0,1) < (r,0) for every sampled r > 0
  std::vector<std::string> shown;     // a few rendered comparisons
  AxiomReport e1;                     // E1 on the horn model
  bool strict_y_less_y_plus_x = false;  // y=(1,0), x=(0,1): y < y+x
  bool lc_gen_equal_collapse = false;   // embedded: gen_equal(y, y+x)
};

HornDemoReport horn_angle_demo(std::uint64_t seed, std::size_t acute_samples = 100,
                               long bound = kDefaultWitnessBound);

}  // namespace fictio
