#include "gcf/transform.hpp"

#include <stdexcept>

namespace gcf {

cf_spec scale_equivalence(const cf_spec& spec, const poly_seq& c) {
  if (c.eval(0) != rational(1)) {
    throw std::invalid_argument("scale_equivalence: requires c(0) = 1");
  }
  poly_seq c_prev = c.shifted(-1);
  return cf_spec{c_prev * spec.a, c_prev * c * spec.b};
}

std::optional<poly_seq> to_euler_form(const cf_spec& spec) {
  poly_seq f = spec.a - poly_seq(rational(1)) + spec.b.shifted(-1);
  if (!f.is_zero()) return std::nullopt;
  return -spec.b;
}

limit_estimate euler_value(const poly_seq& r, int precision, long max_terms) {
  const int W = precision + big_float::guard_digits;
  limit_estimate out;
  out.value = big_float(W);

  big_float sum = big_float::from_long(1, W);  // k = 0 empty product
  big_float prod = big_float::from_long(1, W);
  const big_float eps = big_float::pow10(-(W + 3), W);
  big_float last_ratio(W);
  long k = 0;
  bool converged = false;
  while (k < max_terms) {
    ++k;
    rational rk = r.eval(k);
    prod = prod * big_float::from_rational(rk, W);
    sum += prod;
    last_ratio = abs(big_float::from_rational(rk, W));
    if (abs(prod) < eps && cmp(last_ratio, big_float::from_rational(rational(9, 10), W)) < 0) {
      converged = true;
      break;
    }
    if (k > 64 && cmp(last_ratio, big_float::from_long(1, W)) >= 0 && abs(prod) > big_float::from_long(1, W)) {
      out.cls = convergence_class::divergent;
      out.terms_used = k;
      out.note = "partial products fail the ratio test";
      return out;
    }
  }
  out.terms_used = k;
  if (!converged) {
    out.cls = convergence_class::divergent;
    out.note = "series did not converge within max_terms";
    return out;
  }
  if (sum.is_zero()) {
    out.cls = convergence_class::undefined;
    out.note = "series sum is zero";
    return out;
  }
  // tail bound: geometric with the last observed ratio
  double rho = last_ratio.to_double();
  if (rho >= 0.9) rho = 0.9;
  big_float tail = abs(prod) * big_float::from_double(rho / (1 - rho) + 1, W);
  big_float value = big_float::from_rational(r.eval(0), W) + big_float::from_long(1, W) / sum;
  out.cls = convergence_class::geometric;
  out.value = value.rounded_to(precision + big_float::guard_digits);
  big_float res = tail / (sum * sum) + big_float::pow10(-(W - 5), W);
  long e = res.exponent10();
  long d = -e;
  if (d < 0) d = 0;
  if (d > precision) d = precision;
  out.achieved_digits = static_cast<int>(d);
  return out;
}

}  // namespace gcf
