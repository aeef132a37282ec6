#include "gcf/families.hpp"

#include <cmath>
#include <stdexcept>

#include "gcf/errors.hpp"
#include "gcf/special.hpp"

namespace gcf {

namespace {

using basis = cf_term::basis_kind;

poly_seq poly_n() { return poly_seq({rational(0), rational(1)}); }

poly_seq poly_pow(const poly_seq& p, long e) {
  poly_seq r{rational(1)};
  for (long i = 0; i < e; ++i) r = r * p;
  return r;
}

void check_family1(const family1_params& p) {
  if (p.a == 0) throw std::invalid_argument("family 1: a must be nonzero");
  if (p.D() < 1) throw std::invalid_argument("family 1: requires D = a + k + 1 >= 1");
}

/// sum_{s=0}^{D-1} a^s / s!
rational exp_partial_sum(long a, long D) {
  rational s(0), t(1);
  for (long i = 0; i < D; ++i) {
    if (i > 0) t = t * rational(a) / rational(i);
    s += t;
  }
  return s;
}

}  // namespace

cf_spec family1_spec(const family1_params& p) {
  check_family1(p);
  return cf_spec{poly_seq({rational(p.k), rational(1)}), poly_seq({rational(0), rational(p.a)})};
}

cf_spec family2_spec(const family2_params& p) {
  return cf_spec{poly_seq({rational(1), p.b, p.a}), poly_seq({rational(0), -p.b, -p.a})};
}

cf_spec family3_spec(const family3_params& p) {
  if (p.k < 2) throw std::invalid_argument("family 3: requires k >= 2");
  poly_seq n = poly_n();
  poly_seq nm1({rational(-1), rational(1)});
  poly_seq a = poly_pow(nm1, p.k) + poly_pow(n, p.k);
  poly_seq b = -poly_pow(n, 2 * p.k);
  return cf_spec{a, b};
}

closed_form_value family1_limit(const family1_params& p, int precision) {
  check_family1(p);
  const long D = p.D();
  const rational aD = pow_rat(rational(p.a), D);
  const rational f((integer(factorial(static_cast<unsigned long>(D - 1)))));
  const rational S = exp_partial_sum(p.a, D);

  closed_form_value out;
  exact_expr e;
  e.num.push_back({aD, basis::one, rational(0)});
  e.den.push_back({-f * S, basis::one, rational(0)});
  e.den.push_back({f, basis::exp, rational(p.a)});
  out.exact = e;
  out.expr = render_exact(e);
  out.precision = precision;
  out.value = eval_exact(e, precision);
  return out;
}

closed_form_value family1_derangement_form(long k, int precision) {
  if (k < 0) throw std::invalid_argument("derangement form: k >= 0");
  const int W = precision + big_float::guard_digits;
  const integer kf = factorial(static_cast<unsigned long>(k));
  // literal route: e k! sum_{s<=k} (-1)^s/s!
  rational s(0), t(1);
  for (long i = 0; i <= k; ++i) {
    if (i > 0) t = t * rational(-1) / rational(i);
    s += t;
  }
  const rational literal_coeff = rational(kf) * s;
  // derangement route: the same integer via the recurrence
  const integer dk = derangement(static_cast<unsigned long>(k));
  if (literal_coeff != rational(dk)) {
    throw verification_error("derangement form: k! sum differs from derangement number");
  }

  const rational sign((k % 2 == 0) ? 1 : -1);
  exact_expr e;
  e.num.push_back({sign, basis::exp, rational(1)});
  e.den.push_back({rational(dk), basis::exp, rational(1)});
  e.den.push_back({-rational(kf), basis::one, rational(0)});

  // numeric agreement of the two routes
  big_float ev = eval_exp(rational(1), W);
  big_float lit = (big_float::from_rational(sign, W) * ev) /
                  (ev * big_float::from_rational(literal_coeff, W) - big_float::from_rational(rational(kf), W));
  big_float rec = eval_exact(e, W);
  if (abs(lit - rec) > big_float::pow10(-(precision - 2), W) * (abs(rec) + 1)) {
    throw verification_error("derangement form: evaluation routes disagree");
  }

  closed_form_value out;
  out.exact = e;
  out.expr = render_exact(e);
  out.precision = precision;
  out.value = rec.rounded_to(precision);
  return out;
}

std::pair<rational, closed_form_value> family1_asymptotic_constants(const family1_params& p) {
  check_family1(p);
  const long D = p.D();
  const rational bp = pow_rat(rational(-p.a), D + 1);
  const rational f((integer(factorial(static_cast<unsigned long>(D - 1)))));
  const rational S = exp_partial_sum(p.a, D);
  const rational sgn((D % 2 == 0) ? 1 : -1);

  exact_expr e;
  e.num.push_back({sgn * rational(p.a) * f * S, basis::one, rational(0)});
  e.num.push_back({-sgn * rational(p.a) * f, basis::exp, rational(p.a)});

  closed_form_value bq;
  bq.exact = e;
  bq.expr = render_exact(e);
  bq.precision = 30;
  bq.value = eval_exact(e, 30);

  // postcondition: B_p / B_q = family1_limit
  big_float ratio = big_float::from_rational(bp, 40) / eval_exact(e, 40);
  big_float lim = family1_limit(p, 40).value;
  if (abs(ratio - lim) > big_float::pow10(-25, 40) * (abs(lim) + 1)) {
    throw verification_error("family 1 asymptotic constants: B_p/B_q != limit");
  }
  return {bp, bq};
}

namespace {

bool nonpositive_integer(const rational& b) {
  return b.is_integer() && b.sign() <= 0;
}

// log10 |r| within about +-0.7, robust to values far outside double range
double log10_abs_est(const rational& r) {
  if (r.is_zero()) return -1e18;
  const double lg2 = 0.30102999566398119;
  double bn = static_cast<double>(mpz_sizeinbase(r.num().get_mpz_t(), 2));
  double bd = static_cast<double>(mpz_sizeinbase(r.den().get_mpz_t(), 2));
  return (bn - bd) * lg2;
}

// shared core for kummer_M and its derivatives; order = highest derivative
std::array<big_float, 3> kummer_series(const rational& a, const rational& b, const rational& z,
                                       int precision, long terms, int order) {
  if (nonpositive_integer(b)) {
    throw std::invalid_argument("kummer_M: b must not be a nonpositive integer");
  }
  const int W = precision + big_float::guard_digits;
  // t_k = a^(k) / (b^(k) k!) z^k, exact
  rational t(1);
  std::array<big_float, 3> sums = {big_float(W), big_float(W), big_float(W)};
  sums[0] = big_float::from_long(1, W);  // k = 0 contributes only to M
  const double target = -(W + 3);
  for (long k = 1; k <= terms; ++k) {
    rational num = (a + rational(k - 1)) * z;
    rational den = (b + rational(k - 1)) * rational(k);
    t = t * num / den;
    big_float tb = big_float::from_rational(t, W);
    sums[0] += tb;
    if (order >= 1) sums[1] += tb * k;                      // d/dz sum t_k z^k = sum k t_k z^(k-1) * z / z
    if (order >= 2) sums[2] += tb * (k * (k - 1));
    // stop when the tail is provably below target: once the term ratio is
    // below 1/2, the remaining tail is < 2 |t_k| (and < 2 k^2 |t_k| for M'')
    double logt = log10_abs_est(t);
    double next_ratio =
        std::fabs(mpq_get_d(((a + rational(k)) * z / ((b + rational(k)) * rational(k + 1))).mpq().get_mpq_t()));
    if (next_ratio < 0.5 && logt + 2 * std::log10(static_cast<double>(k) + 2) < target) {
      // derivatives divide by z, z^2 below
      std::array<big_float, 3> out;
      out[0] = sums[0];
      if (order >= 1) out[1] = sums[1] / big_float::from_rational(z, W);
      if (order >= 2) out[2] = sums[2] / (big_float::from_rational(z, W) * big_float::from_rational(z, W));
      return out;
    }
  }
  throw std::invalid_argument("kummer_M: term budget too small for requested precision");
}

}  // namespace

big_float kummer_M(const rational& a, const rational& b, const rational& z, int precision,
                   long terms) {
  if (z.is_zero()) return big_float::from_long(1, precision);
  return kummer_series(a, b, z, precision, terms, 0)[0].rounded_to(precision);
}

std::array<big_float, 3> kummer_M_derivs(const rational& a, const rational& b, const rational& z,
                                         int precision, long terms) {
  if (z.is_zero()) throw std::invalid_argument("kummer_M_derivs: z must be nonzero");
  auto s = kummer_series(a, b, z, precision, terms, 2);
  return {s[0].rounded_to(precision), s[1].rounded_to(precision), s[2].rounded_to(precision)};
}

big_float tricomi_U_special(long D, const big_float& z) {
  if (D < 1) throw std::invalid_argument("tricomi_U_special: D >= 1");
  if (z.is_zero()) throw std::invalid_argument("tricomi_U_special: z must be nonzero");
  big_float one = big_float::from_long(1, z.digits());
  return pow_si(z, -D) * (one + big_float::from_long(D, z.digits()) / z);
}

rational tricomi_U_special_exact(long D, const rational& z) {
  if (D < 1) throw std::invalid_argument("tricomi_U_special: D >= 1");
  if (z.is_zero()) throw std::invalid_argument("tricomi_U_special: z must be nonzero");
  return pow_rat(z, -D) * (rational(1) + rational(D) / z);
}

std::array<big_float, 3> tricomi_U_derivs(long D, const big_float& z) {
  if (D < 1 || z.is_zero()) throw std::invalid_argument("tricomi_U_derivs: bad arguments");
  const int W = z.digits();
  big_float one = big_float::from_long(1, W);
  big_float u = pow_si(z, -D) * (one + big_float::from_long(D, W) / z);
  // U'  = -D z^-(D+1) - D(D+1) z^-(D+2)
  big_float up = pow_si(z, -D - 1) * (-D) + pow_si(z, -D - 2) * (-D * (D + 1));
  // U'' = D(D+1) z^-(D+2) + D(D+1)(D+2) z^-(D+3)
  big_float upp = pow_si(z, -D - 2) * (D * (D + 1)) + pow_si(z, -D - 3) * (D * (D + 1) * (D + 2));
  return {u, up, upp};
}

big_float family2_F(const rational& a, const rational& b, int precision) {
  if (a.sign() <= 0) throw std::invalid_argument("family2_F: requires a > 0");
  const rational base = rational(3) + b / a;
  if (base.sign() <= 0) throw std::invalid_argument("family2_F: requires 3 + b/a > 0");
  const int W = precision + big_float::guard_digits;
  // t_k = 2 / ((k+2)! (3+b/a)^(k) a^k); t_0 = 1
  rational t(1);
  big_float sum = big_float::from_long(1, W);
  const double target = -(W + 3);
  for (long k = 1; k <= 100000; ++k) {
    t = t / (rational(k + 2) * (base + rational(k - 1)) * a);
    sum += big_float::from_rational(t, W);
    if (log10_abs_est(t) < target) return sum.rounded_to(precision);
  }
  throw std::runtime_error("family2_F: series did not converge");
}

closed_form_value family2_limit(const family2_params& p, int precision) {
  if (p.a.sign() <= 0) throw std::invalid_argument("family 2: requires a > 0");
  if (p.b.sign() < 0) throw std::invalid_argument("family 2: requires b >= 0");
  const int W = precision + big_float::guard_digits;
  const rational c1 = rational(2) * (rational(2) * p.a + p.b) * (p.a + p.b + rational(1));
  const rational c2 = rational(2) * (rational(2) * p.a + p.b);
  big_float F = family2_F(p.a, p.b, W);
  big_float value = (F + big_float::from_rational(c1, W)) / (F + big_float::from_rational(c2, W));

  // mandatory cross-check against the convergents
  limit_estimate est = estimate_limit(family2_spec(p), 12, 2048);
  if (est.cls == convergence_class::divergent || est.cls == convergence_class::undefined ||
      est.cls == convergence_class::undetermined) {
    throw verification_error("family 2: convergent cross-check did not converge (" +
                             to_string(est.cls) + ")");
  }
  if (est.achieved_digits < 6 ||
      abs(value - est.value.rounded_to(W)) >
          big_float::pow10(-6, W) * (abs(value) + 1)) {
    throw verification_error("family 2: closed form disagrees with convergents");
  }

  closed_form_value out;
  out.precision = precision;
  out.value = value.rounded_to(precision);
  if (p.a == rational(4) && p.b == rational(6)) {
    exact_expr e;
    e.num.push_back({rational(3), basis::one, rational(0)});
    e.den.push_back({rational(3), basis::one, rational(0)});
    e.den.push_back({rational(-1), basis::exp, rational(1)});
    out.exact = e;
    out.expr = render_exact(e);
  } else if (p.a == rational(6) && p.b == rational(9)) {
    exact_expr e;
    e.num.push_back({rational(-27), basis::sinh, rational(2, 3)});
    e.num.push_back({rational(18), basis::cosh, rational(2, 3)});
    e.den = e.num;
    e.den.push_back({rational(-4), basis::one, rational(0)});
    out.exact = e;
    out.expr = render_exact(e);
  } else {
    out.expr = "(F(" + p.a.to_string() + ", " + p.b.to_string() + ") + " + c1.to_string() +
               ") / (F + " + c2.to_string() + "),  F = " + F.rounded_to(precision).to_string();
  }
  if (out.exact) {
    big_float ex = eval_exact(*out.exact, W);
    if (abs(ex - value) > big_float::pow10(-(precision - 2), W) * (abs(value) + 1)) {
      throw verification_error("family 2: pinned exact form disagrees with series value");
    }
  }
  return out;
}

big_float family2_halfint_series(const rational& a, long m, int precision) {
  if (a.sign() <= 0) throw std::invalid_argument("family2_halfint_series: requires a > 0");
  if (m < 0) throw std::invalid_argument("family2_halfint_series: requires m >= 0");
  const int W = precision + big_float::guard_digits;
  const rational z = rational(4) / a;
  // s_k = (k+m+2)! / ((k+2)! (2k+2m+4)!) z^k
  rational s = rational(factorial(static_cast<unsigned long>(m + 2))) /
               (rational(2) * rational(factorial(static_cast<unsigned long>(2 * m + 4))));
  big_float sum = big_float::from_rational(s, W);
  const double target = -(W + 3);
  for (long k = 1; k <= 100000; ++k) {
    // ratio s_k/s_{k-1} = (k+m+2) z / ((k+2)(2k+2m+3)(2k+2m+4))
    s = s * rational(k + m + 2) * z /
        (rational(k + 2) * rational(2 * k + 2 * m + 3) * rational(2 * k + 2 * m + 4));
    sum += big_float::from_rational(s, W);
    if (log10_abs_est(s) < target) break;
    if (k == 100000) throw std::runtime_error("family2_halfint_series: no convergence");
  }
  const rational pre = rational(2) * rational(factorial(static_cast<unsigned long>(4 + 2 * m))) /
                       rational(factorial(static_cast<unsigned long>(m + 2)));
  big_float value = big_float::from_rational(pre, W) * sum;

  big_float direct = family2_F(a, a * (rational(m) - rational(1, 2)), W);
  if (abs(value - direct) > big_float::pow10(-(precision), W) * (abs(direct) + 1)) {
    throw verification_error("family2_halfint_series: transformed series disagrees with F");
  }
  return value.rounded_to(precision);
}

closed_form_value family3_limit(const family3_params& p, int precision) {
  if (p.k < 2) throw std::invalid_argument("family 3: requires k >= 2");
  exact_expr e;
  e.num.push_back({rational(1), basis::one, rational(0)});
  e.den.push_back({rational(1), basis::zeta, rational(p.k)});
  closed_form_value out;
  out.exact = e;
  out.expr = render_exact(e);
  out.precision = precision;
  out.value = eval_exact(e, precision);
  return out;
}

std::pair<integer, rational> family3_pq_closed(long k, long n) {
  if (k < 2) throw std::invalid_argument("family3_pq_closed: requires k >= 2");
  if (n < 0) throw std::invalid_argument("family3_pq_closed: requires n >= 0");
  integer p = pow_int(factorial(static_cast<unsigned long>(n + 1)), static_cast<unsigned long>(k));
  rational h(0);
  for (long j = 1; j <= n + 1; ++j) h += rational(1) / pow_rat(rational(j), k);
  return {p, rational(p) * h};
}

}  // namespace gcf
