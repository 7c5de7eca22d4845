#include "fictio/magnitudes.hpp"

#include "fictio/sampling.hpp"

namespace fictio {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::E1: return "E1";
    case Axiom::E2: return "E2";
    case Axiom::E3: return "E3";
    case Axiom::E4: return "E4";
    case Axiom::E5: return "E5";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Comparability of LC numbers.

namespace {

void require_positive(const LCNumber& x, const char* name) {
  if (!(x > LCNumber::zero(x.mode(), x.window()))) {
    throw DomainError(std::string(name) + " must be positive");
  }
}

}  // namespace

bool comparable(const LCNumber& x, const LCNumber& y) {
  require_positive(x, "x");
  require_positive(y, "y");
  return x.ord() == y.ord();
}

bool incomparably_smaller(const LCNumber& x, const LCNumber& y) {
  require_positive(x, "x");
  require_positive(y, "y");
  return x.ord() > y.ord();
}

// ---------------------------------------------------------------------------
// RationalsModel.

RationalsModel::RationalsModel(std::vector<Rational> samples) : samples_(std::move(samples)) {
  for (const auto& s : samples_) {
    if (s.sign() <= 0) throw DomainError("magnitude samples must be positive");
  }
}

RationalsModel RationalsModel::default_samples(std::uint64_t seed, std::size_t count) {
  std::vector<Rational> xs = {Rational(1), Rational(2), Rational(3), Rational(1, 2),
                              Rational(1, 100), Rational(100)};
  Sampler rng(seed);
  while (xs.size() < count) xs.push_back(rng.positive_rational(100, 100));
  return RationalsModel(std::move(xs));
}

WitnessOutcome RationalsModel::exact_witness(const Element& x, const Element& y,
                                             long bound) const {
  // Smallest n with n*x > y is floor(y/x) + 1.
  Rational ratio = y / x;
  if (ratio >= Rational(bound)) return {WitnessOutcome::Kind::NoneUpTo, 0, bound};
  long n = ratio.floor_to_long() + 1;
  if (n < 1) n = 1;
  return {WitnessOutcome::Kind::Witness, n, bound};
}

// ---------------------------------------------------------------------------
// PositiveLCModel.

PositiveLCModel::PositiveLCModel(std::vector<LCNumber> samples) : samples_(std::move(samples)) {
  for (const auto& s : samples_) {
    if (!(s > LCNumber::zero(s.mode(), s.window()))) {
      throw DomainError("magnitude samples must be positive");
    }
  }
}

PositiveLCModel PositiveLCModel::default_samples(std::uint64_t seed, std::size_t count) {
  std::vector<LCNumber> xs = {LCNumber::eps(), LCNumber::one()};
  Sampler rng(seed);
  while (xs.size() < count) xs.push_back(rng.positive_lc_number(-2, 3, 3, 100, 16));
  return PositiveLCModel(std::move(xs));
}

WitnessOutcome PositiveLCModel::exact_witness(const Element& x, const Element& y,
                                              long bound) const {
  int ox = x.ord(), oy = y.ord();
  if (ox > oy) return {WitnessOutcome::Kind::ProvenNegative, 0, bound};
  if (ox < oy) return {WitnessOutcome::Kind::Witness, 1, bound};
  // Same order: the leading coefficients decide, with an exact tie-break
  // on the lower-order tails when the ratio is an integer.
  Rational ratio = y.leading_coeff().rational() / x.leading_coeff().rational();
  if (ratio > Rational(bound)) return {WitnessOutcome::Kind::NoneUpTo, 0, bound};
  long candidate;
  if (ratio.is_integer()) {
    long q = ratio.floor_to_long();
    candidate = x.scale(Coefficient(Rational(q))) > y ? q : q + 1;
  } else {
    candidate = ratio.floor_to_long() + 1;
  }
  if (candidate < 1) candidate = 1;
  if (candidate > bound) return {WitnessOutcome::Kind::NoneUpTo, 0, bound};
  return {WitnessOutcome::Kind::Witness, candidate, bound};
}

// ---------------------------------------------------------------------------
// Horn angles.

HornAngle::HornAngle(Rational r, Rational c) : rect(std::move(r)), curv(std::move(c)) {
  if (rect.sign() < 0) throw DomainError("rectilinear part of a horn angle cannot be negative");
}

bool HornAngle::is_positive() const {
  return rect.sign() > 0 || (rect.is_zero() && curv.sign() > 0);
}

std::string HornAngle::to_string() const {
  return "(" + rect.to_string() + ", " + curv.to_string() + ")";
}

Ordering horn_cmp(const HornAngle& a, const HornAngle& b) {
  if (a == b) return Ordering::EQ;
  return a < b ? Ordering::LT : Ordering::GT;
}

LCNumber embed_horn(const HornAngle& h, int window) {
  return LCNumber::from_rational(h.rect, window) +
         LCNumber::eps(1, Mode::Exact, window).scale(Coefficient(h.curv));
}

HornModel::HornModel(std::vector<HornAngle> samples) : samples_(std::move(samples)) {
  for (const auto& s : samples_) {
    if (!s.is_positive()) throw DomainError("magnitude samples must be positive");
  }
}

HornModel HornModel::default_samples(std::uint64_t seed, std::size_t count) {
  std::vector<HornAngle> xs = {HornAngle(Rational(0), Rational(1)),
                               HornAngle(Rational(1), Rational(0))};
  Sampler rng(seed);
  while (xs.size() < count) {
    long shape = rng.uniform_long(0, 2);
    if (shape == 0) {
      xs.emplace_back(Rational(0), rng.positive_rational(100, 16));
    } else if (shape == 1) {
      xs.emplace_back(rng.positive_rational(100, 16), Rational(0));
    } else {
      xs.emplace_back(rng.positive_rational(100, 16), rng.positive_rational(100, 16));
    }
  }
  return HornModel(std::move(xs));
}

// ---------------------------------------------------------------------------
// Horn-angle demonstration.

HornDemoReport horn_angle_demo(std::uint64_t seed, std::size_t acute_samples, long bound) {
  HornDemoReport demo;
  HornAngle horn(Rational(0), Rational(1));

  Sampler rng(seed);
  demo.sampled_acute = acute_samples;
  demo.horn_below_all = true;
  for (std::size_t i = 0; i < acute_samples; ++i) {
    // Positive rectilinear angles, a quarter of them squashed down to the
    // 1/10^6 scale.
    Rational r = rng.positive_rational(100, 16);
    if (rng.chance(0.25)) r = r * Rational(1, 1000000);
    HornAngle acute(r, Rational(0));
    bool below = horn < acute;
    demo.horn_below_all = demo.horn_below_all && below;
    if (demo.shown.size() < 5) {
      demo.shown.push_back(horn.to_string() + (below ? " < " : " !< ") + acute.to_string());
    }
  }

  demo.e1 = check_axiom(HornModel::default_samples(seed), Axiom::E1, bound);

  HornAngle y(Rational(1), Rational(0));
  HornAngle x(Rational(0), Rational(1));
  demo.strict_y_less_y_plus_x = y < y + x;
  demo.lc_gen_equal_collapse = gen_equal(embed_horn(y), embed_horn(y) + embed_horn(x));
  return demo;
}

}  // namespace fictio
