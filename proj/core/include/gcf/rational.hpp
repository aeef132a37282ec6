#ifndef GCF_RATIONAL_HPP
#define GCF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gcf/integer.hpp"

namespace gcf {

/// Exact arbitrary-precision fraction.
///
/// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
/// Every constructor canonicalizes, so arithmetic stays in canonical form.
class rational {
 public:
  rational() : v_(0) {}
  rational(long n) : v_(n) {}  // NOLINT: implicit by design
  rational(const integer& n) : v_(n) {}
  rational(const integer& num, const integer& den) : v_(num, den) { canon(); }
  rational(long num, long den) : v_(num, den) { canon(); }
  explicit rational(const mpq_class& q) : v_(q) { canon(); }

  /// Parses "n" or "n/d" with optional sign.
  static rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
      throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator");
    q.canonicalize();
    return rational(q);
  }

  const integer num() const { return v_.get_num(); }
  const integer den() const { return v_.get_den(); }
  const mpq_class& mpq() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const { return v_.get_str(); }

  friend rational operator+(const rational& a, const rational& b) { return wrap(a.v_ + b.v_); }
  friend rational operator-(const rational& a, const rational& b) { return wrap(a.v_ - b.v_); }
  friend rational operator*(const rational& a, const rational& b) { return wrap(a.v_ * b.v_); }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return wrap(a.v_ / b.v_);
  }
  rational operator-() const { return wrap(-v_); }

  rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
  rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
  rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
  rational& operator/=(const rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

  friend rational abs(const rational& a) { return wrap(abs(a.v_)); }

  /// a^e for integer e (negative e inverts; requires a != 0 then).
  friend rational pow_rat(const rational& a, long e) {
    if (e == 0) return rational(1);
    unsigned long ue = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), a.v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den().get_mpz_t(), a.v_.get_den().get_mpz_t(), ue);
    rational out = wrap(r);
    if (e < 0) {
      if (out.is_zero()) throw std::domain_error("rational: 0^negative");
      out = rational(1) / out;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r);

 private:
  static rational wrap(const mpq_class& q) {
    rational r;
    r.v_ = q;  // gmp arithmetic keeps canonical form
    return r;
  }
  void canon() {
    if (v_.get_den() == 0) throw std::domain_error("rational: zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

}  // namespace gcf

#endif
