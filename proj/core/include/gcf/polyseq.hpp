#ifndef GCF_POLYSEQ_HPP
#define GCF_POLYSEQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcf/errors.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// A univariate polynomial in n with rational coefficients, or a ratio of two
/// such polynomials, evaluated at integer n. Coefficients are stored in
/// ascending degree order; an empty denominator means 1.
class poly_seq {
 public:
  /// Cap on accepted input degree (numerator and denominator separately).
  static constexpr int max_input_degree = 16;

  poly_seq() : num_{rational(0)} {}
  explicit poly_seq(rational constant) : num_{std::move(constant)} {}
  explicit poly_seq(std::vector<rational> num, std::vector<rational> den = {});

  /// Parses a restricted arithmetic expression over the variable n with
  /// integer/rational literals and + - * / ^ (nonnegative integer powers).
  static poly_seq parse(const std::string& text);

  const std::vector<rational>& num() const { return num_; }
  const std::vector<rational>& den() const { return den_; }
  bool has_den() const { return !den_.empty(); }

  long degree() const { return static_cast<long>(num_.size()) - 1; }
  long den_degree() const { return den_.empty() ? 0 : static_cast<long>(den_.size()) - 1; }

  /// True if the sequence is identically zero.
  bool is_zero() const;
  /// True if constant (numerator and denominator both degree 0).
  bool is_constant() const;

  /// Value at integer n; throws denominator_vanishes if the denominator
  /// polynomial is zero there.
  rational eval(long n) const;

  /// Composition n -> n + delta.
  poly_seq shifted(long delta) const;

  poly_seq operator+(const poly_seq& o) const;
  poly_seq operator-(const poly_seq& o) const;
  poly_seq operator*(const poly_seq& o) const;
  poly_seq operator/(const poly_seq& o) const;
  poly_seq operator-() const;

  bool operator==(const poly_seq& o) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<rational> num_;
  std::vector<rational> den_;  // empty means 1
};

}  // namespace gcf

#endif
