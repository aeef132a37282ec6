#ifndef GCF_CLOSED_FORM_HPP
#define GCF_CLOSED_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcf/bigfloat.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// One additive term of a structured closed form: coeff * basis(arg).
/// Basis semantics (arg is an exact rational):
///   one     -> 1
///   exp     -> e^arg
///   sinh    -> sqrt(arg) * sinh(sqrt(arg))   (arg >= 0)
///   cosh    -> cosh(sqrt(arg))               (arg >= 0)
///   zeta    -> zeta(arg)                     (integer arg >= 2)
///   pi_pow  -> pi^arg                        (integer arg)
struct cf_term {
  enum class basis_kind { one, exp, sinh, cosh, zeta, pi_pow };
  rational coeff;
  basis_kind basis = basis_kind::one;
  rational arg;
};

/// A quotient of two term sums; an empty denominator means 1.
struct exact_expr {
  std::vector<cf_term> num;
  std::vector<cf_term> den;
};

/// A closed-form evaluation result: an optional exact structured expression,
/// a human-readable rendering, and the numeric value at the precision used.
struct closed_form_value {
  std::optional<exact_expr> exact;
  std::string expr;
  big_float value;
  int precision = 0;

  std::string to_json() const;
};

std::string to_string(cf_term::basis_kind b);

big_float eval_terms(const std::vector<cf_term>& terms, int digits);
big_float eval_exact(const exact_expr& e, int digits);
std::string render_terms(const std::vector<cf_term>& terms);
std::string render_exact(const exact_expr& e);

}  // namespace gcf

#endif
