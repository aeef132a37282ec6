#ifndef GCF_BIGFLOAT_HPP
#define GCF_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "gcf/integer.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// Arbitrary-precision real with an explicit working precision in decimal
/// digits. Arithmetic is correctly rounded at the wider operand's precision,
/// so results are within one unit in the last working digit.
class big_float {
 public:
  static constexpr int min_digits = 10;
  /// Fixed guard applied by the evaluation routines on top of a requested
  /// target precision.
  static constexpr int guard_digits = 10;

  explicit big_float(int digits = min_digits);
  big_float(const big_float& o);
  big_float(big_float&& o) noexcept;
  big_float& operator=(const big_float& o);
  big_float& operator=(big_float&& o) noexcept;
  ~big_float();

  static big_float from_long(long v, int digits);
  static big_float from_integer(const integer& v, int digits);
  static big_float from_rational(const rational& v, int digits);
  static big_float from_double(double v, int digits);
  /// Parses a base-10 literal like "3.14159" or "8.31e-1".
  static big_float from_string(const std::string& s, int digits);

  int digits() const { return digits_; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Base-10 exponent e with |x| in [10^(e-1), 10^e); 0 for x = 0.
  long exponent10() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Round to nearest integer.
  integer to_integer() const;

  /// Scientific rendering with `sig` significant digits, e.g. "3.1415e0".
  /// Deterministic for fixed input and sig.
  std::string to_string(int sig) const;
  std::string to_string() const { return to_string(digits_); }

  big_float operator-() const;
  friend big_float operator+(const big_float& a, const big_float& b);
  friend big_float operator-(const big_float& a, const big_float& b);
  friend big_float operator*(const big_float& a, const big_float& b);
  friend big_float operator/(const big_float& a, const big_float& b);
  big_float& operator+=(const big_float& o) { return *this = *this + o; }
  big_float& operator-=(const big_float& o) { return *this = *this - o; }
  big_float& operator*=(const big_float& o) { return *this = *this * o; }
  big_float& operator/=(const big_float& o) { return *this = *this / o; }

  friend big_float operator*(const big_float& a, long b);
  friend big_float operator/(const big_float& a, long b);
  friend big_float operator+(const big_float& a, long b);
  friend big_float operator-(const big_float& a, long b);

  friend int cmp(const big_float& a, const big_float& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator==(const big_float& a, const big_float& b) { return cmp(a, b) == 0; }
  friend bool operator<(const big_float& a, const big_float& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const big_float& a, const big_float& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const big_float& a, const big_float& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const big_float& a, const big_float& b) { return cmp(a, b) >= 0; }

  friend big_float abs(const big_float& a);
  friend big_float sqrt(const big_float& a);
  /// a^e for long e.
  friend big_float pow_si(const big_float& a, long e);

  /// 10^e at the given working precision.
  static big_float pow10(long e, int digits);

  /// Round to `digits` decimal digits of working precision.
  big_float rounded_to(int digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const big_float& x);

 private:
  static mpfr_prec_t bits_for(int digits);
  mpfr_t v_;
  int digits_;
};

}  // namespace gcf

#endif
