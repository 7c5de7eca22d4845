#include "fictio/lc_number.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

namespace fictio {

namespace {

constexpr double kFloatTieRelative = 0x1p-40;

void require_same_mode(const LCNumber& a, const LCNumber& b) {
  if (a.mode() != b.mode()) throw ModeMismatch();
}

int checked_window(int window) {
  if (window < 1) throw DomainError("window must be at least 1");
  return window;
}

}  // namespace

const char* classify_name(LCNumber::Class c) {
  switch (c) {
    case LCNumber::Class::Zero: return "zero";
    case LCNumber::Class::Infinitesimal: return "infinitesimal";
    case LCNumber::Class::Appreciable: return "appreciable";
    case LCNumber::Class::Infinite: return "infinite";
  }
  return "?";
}

LCNumber::LCNumber(Mode mode, int window, std::vector<Term> terms, bool lossy)
    : mode_(mode), window_(checked_window(window)), lossy_(lossy), terms_(std::move(terms)) {
  normalize();
}

void LCNumber::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  // Combine duplicate exponents, drop zero coefficients.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : out) {
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  }
  // Re-apply the relative window.
  if (!terms_.empty()) {
    long cut = static_cast<long>(terms_.front().exp) + window_;
    std::size_t keep = terms_.size();
    while (keep > 0 && terms_[keep - 1].exp >= cut) --keep;
    if (keep < terms_.size()) {
      lossy_ = true;
      terms_.resize(keep);
    }
  }
}

LCNumber LCNumber::zero(Mode mode, int window) { return LCNumber(mode, window, {}, false); }

LCNumber LCNumber::one(Mode mode, int window) {
  return monomial(0, Coefficient::one(mode), window);
}

LCNumber LCNumber::from_rational(const Rational& q, int window) {
  return monomial(0, Coefficient(q), window);
}

LCNumber LCNumber::from_double(double x, int window) {
  return monomial(0, Coefficient(x), window);
}

LCNumber LCNumber::from_coefficient(const Coefficient& c, int window) {
  return monomial(0, c, window);
}

LCNumber LCNumber::eps(int k, Mode mode, int window) {
  if (k < 1) throw DomainError("eps order must be a positive integer");
  return monomial(k, Coefficient::one(mode), window);
}

LCNumber LCNumber::monomial(int exp, const Coefficient& c, int window) {
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({exp, c});
  return LCNumber(c.mode(), window, std::move(terms), false);
}

LCNumber::Class LCNumber::classify() const {
  if (terms_.empty()) return Class::Zero;
  int o = ord();
  if (o > 0) return Class::Infinitesimal;
  if (o == 0) return Class::Appreciable;
  return Class::Infinite;
}

Coefficient LCNumber::coeff(int exp) const {
  for (const auto& t : terms_) {
    if (t.exp == exp) return t.coeff;
    if (t.exp > exp) break;
  }
  return Coefficient::zero(mode_);
}

Coefficient LCNumber::leading_coeff() const {
  return terms_.empty() ? Coefficient::zero(mode_) : terms_.front().coeff;
}

LCNumber LCNumber::operator-() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.exp, -t.coeff});
  return LCNumber(mode_, window_, std::move(terms), lossy_);
}

LCNumber operator+(const LCNumber& a, const LCNumber& b) {
  require_same_mode(a, b);
  int window = std::min(a.window_, b.window_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    if (a.terms_[i].exp < b.terms_[j].exp) {
      terms.push_back(a.terms_[i++]);
    } else if (a.terms_[i].exp > b.terms_[j].exp) {
      terms.push_back(b.terms_[j++]);
    } else {
      terms.push_back({a.terms_[i].exp, a.terms_[i].coeff + b.terms_[j].coeff});
      ++i;
      ++j;
    }
  }
  while (i < a.terms_.size()) terms.push_back(a.terms_[i++]);
  while (j < b.terms_.size()) terms.push_back(b.terms_[j++]);
  return LCNumber(a.mode_, window, std::move(terms), a.lossy_ || b.lossy_);
}

LCNumber operator-(const LCNumber& a, const LCNumber& b) { return a + (-b); }

LCNumber operator*(const LCNumber& a, const LCNumber& b) {
  require_same_mode(a, b);
  int window = std::min(a.window_, b.window_);
  if (a.is_zero() || b.is_zero()) {
    return LCNumber::zero(a.mode_, window);
  }
  std::map<long, Coefficient> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      long exp = static_cast<long>(ta.exp) + tb.exp;
      Coefficient prod = ta.coeff * tb.coeff;
      auto it = acc.find(exp);
      if (it == acc.end()) {
        acc.emplace(exp, std::move(prod));
      } else {
        it->second = it->second + prod;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  bool truncated = false;
  long lead = 0;
  bool found_lead = false;
  for (auto& [exp, c] : acc) {
    if (c.is_zero()) continue;
    if (!found_lead) {
      lead = exp;  // ord(a)+ord(b) in exact mode; leading coefficients cannot cancel
      found_lead = true;
    }
    if (exp >= lead + window) {
      truncated = true;
      continue;
    }
    terms.push_back({static_cast<int>(exp), std::move(c)});
  }
  return LCNumber(a.mode_, window, std::move(terms), a.lossy_ || b.lossy_ || truncated);
}

LCNumber LCNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero series");
  int m = ord();
  Coefficient c = leading_coeff();
  if (terms_.size() == 1) {
    return monomial(-m, c.inverse(), window_);
  }
  // Write this = c*eps^m*(1+u) with ord(u) >= 1 and sum the truncated
  // geometric series for (1+u)^-1 by Horner.
  std::vector<Term> uterms;
  uterms.reserve(terms_.size() - 1);
  Coefficient cinv = c.inverse();
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    uterms.push_back({terms_[i].exp - m, terms_[i].coeff * cinv});
  }
  LCNumber u(mode_, window_, std::move(uterms), false);
  LCNumber s = one(mode_, window_);
  for (int j = 1; j < window_; ++j) {
    s = one(mode_, window_) - u * s;
  }
  // The true inverse continues past the window: mark the precision loss.
  return (monomial(-m, cinv, window_) * s).marked_lossy();
}

LCNumber operator/(const LCNumber& a, const LCNumber& b) { return a * b.inverse(); }

LCNumber LCNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  LCNumber base = *this;
  LCNumber acc = one(mode_, window_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

LCNumber LCNumber::marked_lossy() const {
  LCNumber copy = *this;
  copy.lossy_ = true;
  return copy;
}

LCNumber LCNumber::scale(const Coefficient& c) const {
  if (c.mode() != mode_) throw ModeMismatch();
  if (c.is_zero()) return zero(mode_, window_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.exp, t.coeff * c});
  return LCNumber(mode_, window_, std::move(terms), lossy_);
}

Ordering LCNumber::cmp(const LCNumber& a, const LCNumber& b) {
  require_same_mode(a, b);
  LCNumber d = a - b;
  if (d.is_zero()) return Ordering::EQ;
  int e = d.ord();
  Coefficient c = d.leading_coeff();
  if (a.mode_ == Mode::Float) {
    double ca = std::fabs(a.coeff(e).float64());
    double cb = std::fabs(b.coeff(e).float64());
    double scale = std::max(ca, cb);
    if (scale > 0.0 && std::fabs(c.float64()) < scale * kFloatTieRelative) {
      throw IndeterminateComparison("float comparison tie at eps^" + std::to_string(e) +
                                    ": difference below 2^-40 relative");
    }
  }
  return c.sign() > 0 ? Ordering::GT : Ordering::LT;
}

// ---------------------------------------------------------------------------
// Canonical text form.

std::string LCNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.sign() < 0;
    Coefficient mag = negative ? -t.coeff : t.coeff;
    std::string body;
    if (t.exp == 0) {
      body = mag.to_string();
    } else {
      std::string eps_part = t.exp == 1 ? "eps" : "eps^" + std::to_string(t.exp);
      bool unit = mag == Coefficient::one(mode_);
      body = unit ? eps_part : mag.to_string() + "*" + eps_part;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

namespace {

struct LcLexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // digits [ '/' digits | '.' [digits] [exp] | exp ]; exponent marker is
  // consumed only when followed by a digit so that "eps" stays intact.
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "number", pos < src.size() ? std::string(1, src[pos]) : "");
    if (pos < src.size() && src[pos] == '/') {
      std::size_t save = pos;
      ++pos;
      std::size_t dstart = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      if (pos == dstart) pos = save;  // not a fraction after all
      return std::string(src.substr(start, pos - start));
    }
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
      std::size_t save = pos;
      ++pos;
      if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      } else {
        pos = save;  // the 'e' belongs to "eps"
      }
    }
    return std::string(src.substr(start, pos - start));
  }

  bool accept_eps() {
    skip_ws();
    if (src.substr(pos, 3) == "eps") {
      pos += 3;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
      neg = src[pos] == '-';
      ++pos;
    }
    std::size_t dstart = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == dstart)
      throw ParseError(start, "integer exponent",
                       pos < src.size() ? std::string(1, src[pos]) : "");
    long v = std::stol(std::string(src.substr(dstart, pos - dstart)));
    return neg ? -v : v;
  }
};

Coefficient coefficient_from_token(const std::string& tok, Mode mode, std::size_t at) {
  if (mode == Mode::Exact) {
    try {
      return Coefficient(Rational::from_string(tok));
    } catch (const ParseError& e) {
      throw ParseError(at + e.position(), e.expected(), e.found());
    }
  }
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    double num = std::strtod(tok.substr(0, slash).c_str(), nullptr);
    double den = std::strtod(tok.substr(slash + 1).c_str(), nullptr);
    if (den == 0.0) throw DivisionByZero("rational with zero denominator");
    return Coefficient(num / den);
  }
  return Coefficient(std::strtod(tok.c_str(), nullptr));
}

}  // namespace

LCNumber LCNumber::parse(std::string_view text, Mode mode, int window) {
  LcLexer lex{text};
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    if (first && lex.eof()) throw ParseError(lex.pos, "series term", "");
    if (!first && lex.eof()) break;

    int sign = 1;
    if (lex.accept('-')) {
      sign = -1;
    } else if (lex.accept('+')) {
      sign = 1;
    } else if (!first) {
      throw ParseError(lex.pos, "'+' or '-'", std::string(1, lex.peek()));
    }
    first = false;

    Coefficient mag = Coefficient::one(mode);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      std::size_t at = lex.pos;
      std::string tok = lex.number();
      mag = coefficient_from_token(tok, mode, at);
      have_coeff = true;
    }

    int exp = 0;
    bool have_eps = false;
    if (have_coeff) {
      if (lex.accept('*')) {
        if (!lex.accept_eps()) throw ParseError(lex.pos, "'eps'", std::string(1, lex.peek()));
        have_eps = true;
      }
    } else if (lex.accept_eps()) {
      have_eps = true;
    } else {
      throw ParseError(lex.pos, "number or 'eps'", std::string(1, lex.peek()));
    }
    if (have_eps) {
      exp = 1;
      if (lex.accept('^')) {
        long e = lex.integer();
        if (e > 1000000 || e < -1000000) throw ParseError(lex.pos, "exponent in range", std::to_string(e));
        exp = static_cast<int>(e);
      }
    }

    Coefficient c = sign < 0 ? -mag : mag;
    terms.push_back({exp, c});
  }
  return LCNumber(mode, window, std::move(terms), false);
}

}  // namespace fictio
