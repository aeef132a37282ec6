#include "gcf/polyseq.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gcf {

namespace {

using coeffs = std::vector<rational>;

void trim(coeffs& c) {
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

coeffs padd(const coeffs& a, const coeffs& b) {
  coeffs r(std::max(a.size(), b.size()), rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

coeffs pneg(const coeffs& a) {
  coeffs r = a;
  for (auto& c : r) c = -c;
  return r;
}

coeffs pmul(const coeffs& a, const coeffs& b) {
  coeffs r(a.size() + b.size() - 1, rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

bool pzero(const coeffs& a) {
  for (const auto& c : a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

rational peval(const coeffs& a, long n) {
  rational x(n);
  rational r(0);
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

coeffs pshift(const coeffs& a, long delta) {
  // compose with n -> n + delta using Horner on polynomial coefficients:
  // result = a_d, then repeatedly multiply by (n + delta) and add a_i
  coeffs r{rational(0)};
  coeffs lin{rational(delta), rational(1)};
  for (size_t i = a.size(); i-- > 0;) {
    r = pmul(r, lin);
    r[0] += a[i];
  }
  trim(r);
  return r;
}

}  // namespace

poly_seq::poly_seq(std::vector<rational> num, std::vector<rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.empty()) num_ = {rational(0)};
  normalize();
}

void poly_seq::normalize() {
  trim(num_);
  if (!den_.empty()) {
    trim(den_);
    if (pzero(den_)) throw std::domain_error("poly_seq: identically zero denominator");
    if (den_.size() == 1) {
      for (auto& c : num_) c /= den_[0];
      den_.clear();
    } else if (pzero(num_)) {
      den_.clear();
    }
  }
}

bool poly_seq::is_zero() const { return pzero(num_); }

bool poly_seq::is_constant() const { return num_.size() == 1 && den_.empty(); }

rational poly_seq::eval(long n) const {
  rational v = peval(num_, n);
  if (den_.empty()) return v;
  rational d = peval(den_, n);
  if (d.is_zero()) throw denominator_vanishes(n);
  return v / d;
}

poly_seq poly_seq::shifted(long delta) const {
  poly_seq r;
  r.num_ = pshift(num_, delta);
  r.den_ = den_.empty() ? coeffs{} : pshift(den_, delta);
  r.normalize();
  return r;
}

poly_seq poly_seq::operator+(const poly_seq& o) const {
  poly_seq r;
  if (den_.empty() && o.den_.empty()) {
    r.num_ = padd(num_, o.num_);
  } else {
    const coeffs d1 = den_.empty() ? coeffs{rational(1)} : den_;
    const coeffs d2 = o.den_.empty() ? coeffs{rational(1)} : o.den_;
    r.num_ = padd(pmul(num_, d2), pmul(o.num_, d1));
    r.den_ = pmul(d1, d2);
  }
  r.normalize();
  return r;
}

poly_seq poly_seq::operator-() const {
  poly_seq r = *this;
  r.num_ = pneg(r.num_);
  return r;
}

poly_seq poly_seq::operator-(const poly_seq& o) const { return *this + (-o); }

poly_seq poly_seq::operator*(const poly_seq& o) const {
  poly_seq r;
  r.num_ = pmul(num_, o.num_);
  if (!den_.empty() || !o.den_.empty()) {
    const coeffs d1 = den_.empty() ? coeffs{rational(1)} : den_;
    const coeffs d2 = o.den_.empty() ? coeffs{rational(1)} : o.den_;
    r.den_ = pmul(d1, d2);
  }
  r.normalize();
  return r;
}

poly_seq poly_seq::operator/(const poly_seq& o) const {
  if (o.is_zero()) throw std::domain_error("poly_seq: division by zero sequence");
  poly_seq inv;
  inv.num_ = o.den_.empty() ? coeffs{rational(1)} : o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this * inv;
}

bool poly_seq::operator==(const poly_seq& o) const {
  // equality as rational functions: cross-multiplied difference is zero
  return (*this - o).is_zero();
}

std::string poly_seq::to_string() const {
  auto render = [](const coeffs& c) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero() && !(c.size() == 1)) continue;
      rational a = c[i];
      if (first) {
        if (a.sign() < 0) { os << "-"; a = -a; }
        first = false;
      } else {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
      }
      const bool unit = (a == rational(1));
      if (i == 0 || !unit) os << a.to_string();
      if (i > 0) {
        if (!unit) os << "*";
        os << "n";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  };
  if (den_.empty()) return render(num_);
  return "(" + render(num_) + ")/(" + render(den_) + ")";
}

// ---- parser ----

namespace {

struct parser {
  const std::string& s;
  size_t i = 0;

  explicit parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("poly_seq parse error at position " + std::to_string(i) + ": " + msg);
  }

  poly_seq expr() {
    poly_seq v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else break;
    }
    return v;
  }

  poly_seq term() {
    poly_seq v = factor();
    while (true) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) v = v / factor();
      else break;
    }
    return v;
  }

  poly_seq factor() {
    poly_seq b = base();
    if (eat('^')) {
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
        fail("exponent must be a nonnegative integer literal");
      }
      long e = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        e = e * 10 + (s[i] - '0');
        if (e > 64) fail("exponent too large");
        ++i;
      }
      poly_seq r{rational(1)};
      for (long k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  poly_seq base() {
    skip();
    if (eat('(')) {
      poly_seq v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('-')) return -factor();
    if (peek() == 'n') {
      ++i;
      return poly_seq({rational(0), rational(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      return poly_seq(rational(integer(digits)));
    }
    fail("expected literal, 'n', or '('");
  }
};

}  // namespace

poly_seq poly_seq::parse(const std::string& text) {
  parser p(text);
  poly_seq v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  if (v.degree() > max_input_degree || v.den_degree() > max_input_degree) {
    throw std::invalid_argument("poly_seq: degree exceeds cap of " +
                                std::to_string(max_input_degree));
  }
  return v;
}

}  // namespace gcf
