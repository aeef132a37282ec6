#include "gcf/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace gcf {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < big_float::min_digits) digits = big_float::min_digits;
  // log2(10) = 3.3219...; small slack so decimal guard digits survive rounding
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 16);
}

mpfr_prec_t big_float::bits_for(int digits) { return bits_for_digits(digits); }

big_float::big_float(int digits) : digits_(std::max(digits, min_digits)) {
  mpfr_init2(v_, bits_for(digits_));
  mpfr_set_zero(v_, 1);
}

big_float::big_float(const big_float& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

big_float::big_float(big_float&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

big_float& big_float::operator=(const big_float& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

big_float& big_float::operator=(big_float&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

big_float::~big_float() { mpfr_clear(v_); }

big_float big_float::from_long(long v, int digits) {
  big_float r(digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

big_float big_float::from_integer(const integer& v, int digits) {
  big_float r(digits);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

big_float big_float::from_rational(const rational& v, int digits) {
  big_float r(digits);
  mpfr_set_q(r.v_, v.mpq().get_mpq_t(), MPFR_RNDN);
  return r;
}

big_float big_float::from_double(double v, int digits) {
  big_float r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

big_float big_float::from_string(const std::string& s, int digits) {
  big_float r(digits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("big_float: cannot parse '" + s + "'");
  }
  return r;
}

long big_float::exponent10() const {
  if (is_zero()) return 0;
  // mpfr exponent is for base 2: |x| in [2^(e-1), 2^e)
  long e2 = mpfr_get_exp(v_);
  long e10 = static_cast<long>(std::floor(static_cast<double>(e2) * 0.30102999566398119));
  // correct the estimate by at most one in either direction
  big_float a = abs(*this);
  while (cmp(a, pow10(e10, digits_)) >= 0) ++e10;
  while (cmp(a, pow10(e10 - 1, digits_)) < 0) --e10;
  return e10;
}

integer big_float::to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string big_float::to_string(int sig) const {
  if (sig < 2) sig = 2;
  if (!is_finite()) return "nan";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
  std::string digs(s);
  mpfr_free_str(s);
  std::string sign;
  if (digs[0] == '-') { sign = "-"; digs.erase(0, 1); }
  // strip trailing zeros but keep at least one digit after the point
  size_t last = digs.find_last_not_of('0');
  if (last != std::string::npos && last + 1 < digs.size()) digs.erase(last + 1);
  std::string mant = digs.substr(0, 1);
  if (digs.size() > 1) mant += "." + digs.substr(1);
  return sign + mant + "e" + std::to_string(static_cast<long>(e) - 1);
}

big_float big_float::operator-() const {
  big_float r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {
inline int join_digits(const big_float& a, const big_float& b) {
  return std::max(a.digits(), b.digits());
}
}  // namespace

big_float operator+(const big_float& a, const big_float& b) {
  big_float r(join_digits(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

big_float operator-(const big_float& a, const big_float& b) {
  big_float r(join_digits(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

big_float operator*(const big_float& a, const big_float& b) {
  big_float r(join_digits(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

big_float operator/(const big_float& a, const big_float& b) {
  if (b.is_zero()) throw std::domain_error("big_float: division by zero");
  big_float r(join_digits(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

big_float operator*(const big_float& a, long b) {
  big_float r(a.digits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

big_float operator/(const big_float& a, long b) {
  if (b == 0) throw std::domain_error("big_float: division by zero");
  big_float r(a.digits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

big_float operator+(const big_float& a, long b) {
  big_float r(a.digits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

big_float operator-(const big_float& a, long b) {
  big_float r(a.digits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

big_float abs(const big_float& a) {
  big_float r(a);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

big_float sqrt(const big_float& a) {
  if (a.sign() < 0) throw std::domain_error("big_float: sqrt of negative");
  big_float r(a.digits());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

big_float pow_si(const big_float& a, long e) {
  big_float r(a.digits());
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

big_float big_float::pow10(long e, int digits) {
  big_float r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

big_float big_float::rounded_to(int digits) const {
  big_float r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const big_float& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.to_string(); }

}  // namespace gcf
