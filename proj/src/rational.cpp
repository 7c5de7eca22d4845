#include "fictio/rational.hpp"

#include <cctype>
#include <cstddef>

namespace fictio {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  // Trim surrounding whitespace.
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError(b, "rational literal", "");

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }

  auto slash = s.find('/', pos);
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(pos, slash - pos);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num)) throw ParseError(b + pos, "integer numerator", std::string(num));
    if (!all_digits(den)) throw ParseError(b + slash + 1, "integer denominator", std::string(den));
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
  }

  // Integer or decimal, optionally with an exponent.
  std::string digits;
  long frac_len = 0;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_len;
    }
  }
  if (digits.empty()) throw ParseError(b + start, "digits", std::string(s.substr(start)));

  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_neg = s[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      exp_digits += s[pos++];
    }
    if (exp_digits.empty() || exp_digits.size() > 6) {
      throw ParseError(b + pos, "exponent digits", std::string(s.substr(pos)));
    }
    exp10 = std::stol(exp_digits);
    if (exp_neg) exp10 = -exp10;
  }
  if (pos != s.size()) throw ParseError(b + pos, "end of rational literal", std::string(s.substr(pos)));

  mpz_class mant(digits, 10);
  long shift = exp10 - frac_len;
  mpq_class q;
  if (shift >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    q = mpq_class(mant * scale);
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    q = mpq_class(mant, scale);
    q.canonicalize();
  }
  if (negative) q = -q;
  return Rational(std::move(q));
}

Rational Rational::pow2(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
  mpq_class q = k >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
  return Rational(std::move(q));
}

Rational Rational::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::abs() const {
  return sign() < 0 ? Rational(mpq_class(-v_)) : *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(f));
}

long Rational::floor_to_long() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw Error("floor does not fit in a machine integer");
  return f.get_si();
}

}  // namespace fictio
