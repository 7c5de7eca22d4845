#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fictio/lc_number.hpp"
#include "fictio/sampling.hpp"

using fictio::Coefficient;
using fictio::LCNumber;
using fictio::Mode;
using fictio::Ordering;
using fictio::Rational;
using fictio::Sampler;

namespace {

LCNumber lc(const char* text) { return LCNumber::parse(text); }

}  // namespace

TEST_CASE("from_rational embeds at exponent zero") {
  LCNumber three = LCNumber::from_rational(Rational(3));
  REQUIRE(three.terms().size() == 1);
  CHECK(three.terms()[0].exp == 0);
  CHECK(three.coeff(0).rational() == Rational(3));

  CHECK(LCNumber::from_rational(Rational(0)).is_zero());
  CHECK(LCNumber::from_rational(Rational(0)).terms().empty());

  LCNumber q = LCNumber::from_rational(Rational(-5, 2));
  CHECK(q.coeff(0).rational() == Rational(-5, 2));
  CHECK(q.mode() == Mode::Exact);
}

TEST_CASE("eps builds pure infinitesimal orders") {
  LCNumber dx = LCNumber::eps(1);
  REQUIRE(dx.terms().size() == 1);
  CHECK(dx.terms()[0].exp == 1);
  CHECK(dx.terms()[0].coeff.rational() == Rational(1));

  LCNumber dx2 = LCNumber::eps(2);
  CHECK(dx2.terms()[0].exp == 2);

  CHECK_THROWS_AS(LCNumber::eps(0), fictio::DomainError);
  CHECK_THROWS_AS(LCNumber::eps(-1), fictio::DomainError);
}

TEST_CASE("addition of incomparables and cancellation") {
  LCNumber a = LCNumber::one() + LCNumber::eps();
  CHECK(a == lc("1 + eps"));

  LCNumber x = lc("2 + 3*eps");
  CHECK(x + LCNumber::zero() == x);

  CHECK((LCNumber::eps() + (-LCNumber::eps())).is_zero());
  CHECK((lc("1 + eps") - lc("1 + eps")).is_zero());

  CHECK_THROWS_AS(LCNumber::one(Mode::Exact) + LCNumber::one(Mode::Float), fictio::ModeMismatch);
}

TEST_CASE("multiplication") {
  CHECK(LCNumber::eps() * LCNumber::eps() == LCNumber::eps(2));
  LCNumber x = lc("3 + eps - 2*eps^2");
  CHECK(x * LCNumber::one() == x);
  CHECK(lc("1 + eps") * lc("1 - eps") == lc("1 - eps^2"));
  CHECK((lc("1 + eps") * lc("1 - eps")).lossy() == false);
}

TEST_CASE("multiplication truncates to the window and flags the loss") {
  // Window 4: (1 + eps^3)^2 = 1 + 2 eps^3 + eps^6; eps^6 falls outside [0, 4).
  LCNumber a = LCNumber::one(Mode::Exact, 4) + LCNumber::eps(3, Mode::Exact, 4);
  LCNumber p = a * a;
  CHECK(p == LCNumber::parse("1 + 2*eps^3", Mode::Exact, 4));
  CHECK(p.lossy());
  // ord is preserved exactly even when the tail is cut.
  CHECK(p.ord() == 0);
}

TEST_CASE("inverse: monomials exactly") {
  LCNumber inv_eps = LCNumber::eps().inverse();
  CHECK(inv_eps == lc("eps^-1"));
  CHECK(inv_eps.classify() == LCNumber::Class::Infinite);
  CHECK_FALSE(inv_eps.lossy());

  CHECK(LCNumber::from_rational(Rational(2)).inverse() == lc("1/2"));
  CHECK_THROWS_AS(LCNumber::zero().inverse(), fictio::DivisionByZero);
}

TEST_CASE("inverse of 1 + eps is the truncated alternating series") {
  // Oracle: multiply back and require agreement with 1 through the window.
  LCNumber a = lc("1 + eps");
  LCNumber inv = a.inverse();
  for (int k = 0; k < LCNumber::kDefaultWindow; ++k) {
    Rational expect = (k % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(inv.coeff(k).rational() == expect);
  }
  LCNumber product = a * inv;
  LCNumber residue = product - LCNumber::one();
  CHECK((residue.is_zero() || residue.ord() >= product.ord() + LCNumber::kDefaultWindow - 1));
  CHECK(inv.lossy());
}

TEST_CASE("inverse correctness on random invertible values") {
  Sampler rng(11);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    LCNumber a = rng.nonzero_lc_number(-3, 3, 4, 100, 8);
    LCNumber p = a * a.inverse();
    LCNumber residue = p - LCNumber::one();
    ++checked;
    bool ok = residue.is_zero() || residue.ord() >= p.ord() + LCNumber::kDefaultWindow - 1;
    if (!ok) {
      CAPTURE(a.to_string());
      CHECK(ok);
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("division") {
  LCNumber q = LCNumber::one() / LCNumber::eps();
  CHECK(q == lc("eps^-1"));
  CHECK(lc("6 + 2*eps") / lc("2") == lc("3 + eps"));
  CHECK_THROWS_AS(LCNumber::one() / LCNumber::zero(), fictio::DivisionByZero);
}

TEST_CASE("comparison: infinitesimals below every positive rational") {
  CHECK(LCNumber::cmp(LCNumber::eps(), LCNumber::from_rational(Rational(1, 1000000))) ==
        Ordering::LT);
  LCNumber x = lc("5 - 2*eps");
  CHECK(LCNumber::cmp(x, x) == Ordering::EQ);
  CHECK(LCNumber::cmp(lc("eps^-1"), LCNumber::from_rational(Rational(1000000000))) ==
        Ordering::GT);
  CHECK(LCNumber::eps() > LCNumber::zero());
  CHECK(lc("1 + eps") > lc("1"));
  CHECK(lc("1 - eps") < lc("1"));
}

TEST_CASE("float comparison ties raise an explicit error") {
  LCNumber a = LCNumber::from_double(1.0);
  LCNumber b = LCNumber::from_double(1.0 + 0x1p-50);
  CHECK_THROWS_AS(LCNumber::cmp(a, b), fictio::IndeterminateComparison);

  LCNumber c = LCNumber::from_double(1.0 + 0x1p-30);
  CHECK(LCNumber::cmp(a, c) == Ordering::LT);
  // Exact cancellation is still EQ, not an error.
  CHECK(LCNumber::cmp(a, LCNumber::from_double(1.0)) == Ordering::EQ);
}

TEST_CASE("ord and classify") {
  CHECK(lc("6 + eps").ord() == 0);
  CHECK(lc("eps^2 + eps^3").ord() == 2);
  CHECK(LCNumber::zero().ord() == LCNumber::kInfiniteOrd);

  CHECK(LCNumber::eps().classify() == LCNumber::Class::Infinitesimal);
  CHECK(lc("7 + eps").classify() == LCNumber::Class::Appreciable);
  CHECK(lc("eps^-2").classify() == LCNumber::Class::Infinite);
  CHECK(LCNumber::zero().classify() == LCNumber::Class::Zero);
}

TEST_CASE("ord is a homomorphism for multiplication") {
  Sampler rng(13);
  for (int i = 0; i < 10000; ++i) {
    LCNumber a = rng.nonzero_lc_number(-3, 3, 4, 100, 8);
    LCNumber b = rng.nonzero_lc_number(-3, 3, 4, 100, 8);
    CHECK((a * b).ord() == a.ord() + b.ord());
  }
}

TEST_CASE("ring axioms hold exactly in exact mode") {
  Sampler rng(17);
  for (int i = 0; i < 10000; ++i) {
    LCNumber a = rng.lc_number(-3, 3, 4, 100, 8);
    LCNumber b = rng.lc_number(-3, 3, 4, 100, 8);
    LCNumber c = rng.lc_number(-3, 3, 4, 100, 8);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("order laws") {
  Sampler rng(19);
  for (int i = 0; i < 2000; ++i) {
    LCNumber a = rng.lc_number(-3, 3, 3, 50, 6);
    LCNumber b = rng.lc_number(-3, 3, 3, 50, 6);
    LCNumber c = rng.lc_number(-3, 3, 3, 50, 6);
    // Trichotomy.
    Ordering o = LCNumber::cmp(a, b);
    if (o == Ordering::EQ) CHECK(a == b);
    if (o == Ordering::LT) CHECK(LCNumber::cmp(b, a) == Ordering::GT);
    // Translation invariance.
    if (o == Ordering::LT) CHECK(a + c < b + c);
    // Positive scaling.
    if (o == Ordering::LT && c > LCNumber::zero()) CHECK(a * c < b * c);
  }
}

TEST_CASE("the Archimedean property fails: n*eps < 1 for all n up to 1e5") {
  LCNumber eps = LCNumber::eps();
  LCNumber one = LCNumber::one();
  LCNumber acc = LCNumber::zero();
  bool all_below = true;
  for (long n = 1; n <= 100000; ++n) {
    acc = acc + eps;
    if (!(acc < one)) {
      all_below = false;
      break;
    }
  }
  CHECK(all_below);
  // The same fact by the exact order rule: n*eps has ord 1 > ord(1) = 0.
  CHECK(eps.scale(Coefficient(Rational(100000))).ord() > one.ord());
}

TEST_CASE("window re-applies relative to the new leading order") {
  // 1 + eps^20 cannot be stored with window 16: the tail is truncated.
  LCNumber t = LCNumber::one(Mode::Exact, 16) + LCNumber::eps(20, Mode::Exact, 16);
  CHECK(t == LCNumber::one());
  CHECK(t.lossy());
  // Mixed-window operands take the tighter window.
  LCNumber wide = LCNumber::one(Mode::Exact, 32);
  LCNumber narrow = LCNumber::eps(1, Mode::Exact, 8);
  CHECK((wide + narrow).window() == 8);
}

TEST_CASE("canonical text form") {
  CHECK(lc("3 + 2*eps - 1/2*eps^3").to_string() == "3 + 2*eps - 1/2*eps^3");
  CHECK(lc("eps^-2").to_string() == "eps^-2");
  CHECK(LCNumber::zero().to_string() == "0");
  CHECK(LCNumber::eps().to_string() == "eps");
  CHECK((-LCNumber::eps()).to_string() == "-eps");
  CHECK(lc("-3").to_string() == "-3");
  CHECK(lc("1 - eps").to_string() == "1 - eps");
  // Terms print sorted by exponent; infinite orders come first.
  CHECK((lc("3") + lc("eps^-2")).to_string() == "eps^-2 + 3");
  // Duplicate terms in the input are summed.
  CHECK(lc("eps + eps") == lc("2*eps"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(LCNumber::parse(""), fictio::ParseError);
  CHECK_THROWS_AS(LCNumber::parse("3 +"), fictio::ParseError);
  CHECK_THROWS_AS(LCNumber::parse("3 4"), fictio::ParseError);
  CHECK_THROWS_AS(LCNumber::parse("foo"), fictio::ParseError);
  CHECK_THROWS_AS(LCNumber::parse("2*"), fictio::ParseError);
  CHECK_THROWS_AS(LCNumber::parse("eps^"), fictio::ParseError);
}

TEST_CASE("round-trip print/parse identity in exact mode") {
  Sampler rng(23);
  for (int i = 0; i < 1000; ++i) {
    LCNumber a = rng.lc_number(-5, 9, 5, 1000, 50);
    CHECK(LCNumber::parse(a.to_string()) == a);
  }
}

TEST_CASE("float mode round-trip and arithmetic") {
  LCNumber a = LCNumber::from_double(0.1) + LCNumber::eps(1, Mode::Float);
  CHECK(LCNumber::parse(a.to_string(), Mode::Float) == a);
  CHECK(a.coeff(0).float64() == 0.1);
  LCNumber sq = a * a;
  CHECK(sq.coeff(0).float64() == 0.1 * 0.1);
  CHECK(sq.coeff(1).float64() == 2 * 0.1);
  CHECK_THROWS_AS(a + LCNumber::one(Mode::Exact), fictio::ModeMismatch);
}
