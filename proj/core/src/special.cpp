#include "gcf/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace gcf {

namespace {

// ---- binary splitting for sum_{k=0}^{N-1} (u/v)^k / k! ----
//
// Over [a, b): pn = u^(b-a), pd = prod_{j=a+1}^{b} v*j, and
// t = pd * sum_{k=a}^{b-1} t_k/t_a, so the full sum is t(0,N)/pd(0,N).
struct split_part {
  integer pn, pd, t;
};

split_part split_sum(const integer& u, const integer& v, long a, long b) {
  if (b - a == 1) {
    integer pd = v * integer(a + 1);
    return {u, pd, pd};
  }
  long m = (a + b) / 2;
  split_part left = split_sum(u, v, a, m);
  split_part right = split_sum(u, v, m, b);
  return {left.pn * right.pn, left.pd * right.pd,
          left.t * right.pd + left.pn * right.t};
}

long exp_terms_needed(double absx, int wdigits) {
  double target = -(wdigits + 3) * 2.302585092994046;  // ln(10^-(W+3))
  double logt = 0.0;
  long n = 1;
  while (true) {
    logt += std::log(absx) - std::log(static_cast<double>(n));
    if (logt < target && n >= 2 * absx + 4) return n + 1;
    ++n;
    if (n > 100000000) throw std::runtime_error("eval_exp: term bound not reached");
  }
}

}  // namespace

big_float eval_exp(const rational& x, int digits) {
  const int W = digits + big_float::guard_digits;
  if (x.is_zero()) return big_float::from_long(1, digits);
  const bool neg = x.sign() < 0;
  const rational ax = neg ? -x : x;
  const integer u = ax.num();
  const integer v = ax.den();

  double axd = mpq_get_d(ax.mpq().get_mpq_t());
  if (axd < 1e-12) axd = 1e-12;
  const long N = exp_terms_needed(axd, W);

  split_part s = split_sum(u, v, 0, N);
  big_float t = big_float::from_integer(s.t, W);
  big_float pd = big_float::from_integer(s.pd, W);
  big_float sum = t / pd;
  if (neg) sum = big_float::from_long(1, W) / sum;
  return sum.rounded_to(digits);
}

big_float exp_bf(const big_float& x, int digits) {
  const int W = digits + big_float::guard_digits;
  if (x.is_zero()) return big_float::from_long(1, digits);
  // split x = n + f with |f| <= 1/2
  big_float xw = x.rounded_to(W);
  integer n = xw.to_integer();
  big_float f = xw - big_float::from_integer(n, W);
  big_float en = eval_exp(rational(n), W);
  // e^f by direct Taylor; |f| <= 1/2 so terms decay at least as 2^-k/k!
  big_float eps = big_float::pow10(-(W + 3), W);
  big_float term = big_float::from_long(1, W);
  big_float sum = term;
  long k = 1;
  while (true) {
    term = term * f / k;
    sum += term;
    if (abs(term) < eps) break;
    if (++k > 4 * W + 64) throw std::runtime_error("exp_bf: no convergence");
  }
  return (en * sum).rounded_to(digits);
}

namespace {

// atan(1/c) for integer c >= 2
big_float atan_inv(long c, int W) {
  big_float eps = big_float::pow10(-(W + 3), W);
  big_float x = big_float::from_long(1, W) / c;
  const long c2 = c * c;
  big_float sum(W);
  long j = 0;
  while (true) {
    big_float t = x / (2 * j + 1);
    if (j % 2 == 0) sum += t; else sum -= t;
    if (t < eps) break;
    x = x / c2;
    ++j;
  }
  return sum;
}

}  // namespace

big_float eval_pi(int digits) {
  const int W = digits + big_float::guard_digits;
  big_float p = atan_inv(5, W) * 16 - atan_inv(239, W) * 4;
  return p.rounded_to(digits);
}

const rational& bernoulli(unsigned long m) {
  static std::vector<rational> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (m >= table.size()) {
    if (table.empty()) table.push_back(rational(1));
    for (unsigned long n = table.size(); n <= m; ++n) {
      // B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
      rational acc(0);
      for (unsigned long j = 0; j < n; ++j) {
        acc += rational(binomial(n + 1, j)) * table[j];
      }
      table.push_back(-acc / rational(static_cast<long>(n) + 1));
    }
  }
  return table[m];
}

rational rising_factorial(const rational& x, unsigned long k) {
  rational r(1);
  for (unsigned long i = 0; i < k; ++i) r *= x + rational(static_cast<long>(i));
  return r;
}

big_float em_sum(long s, const rational& c, int digits) {
  if (s < 2) throw std::domain_error("em_sum: requires s >= 2");
  if (c.sign() <= 0) throw std::domain_error("em_sum: requires c > 0");
  const int W = digits + big_float::guard_digits;
  const long J = std::max<long>(16, static_cast<long>(0.55 * W) + 1);

  big_float sum(W);
  for (long j = 0; j < J; ++j) {
    big_float term = big_float::from_rational(c + rational(j), W);
    sum += big_float::from_long(1, W) / pow_si(term, s);
  }
  // Euler-Maclaurin tail at x0 = c + J:
  //   x0^(1-s)/(s-1) + x0^(-s)/2 + sum_i B_2i/(2i)! * rf(s, 2i-1) * x0^(-(s+2i-1))
  big_float x0 = big_float::from_rational(c + rational(J), W);
  big_float inv = big_float::from_long(1, W) / x0;
  sum += pow_si(x0, 1 - s) / (s - 1);
  sum += pow_si(inv, s) / 2;
  big_float eps = big_float::pow10(-(W + 4), W);
  big_float prev_mag(W);
  bool have_prev = false;
  for (unsigned long i = 1; i <= 512; ++i) {
    rational coeff = bernoulli(2 * i) / rational(factorial(2 * i)) *
                     rising_factorial(rational(s), 2 * i - 1);
    big_float term = big_float::from_rational(coeff, W) * pow_si(inv, s + 2 * static_cast<long>(i) - 1);
    big_float mag = abs(term);
    if (have_prev && cmp(mag, prev_mag) > 0) {
      throw std::runtime_error("em_sum: correction terms stopped decreasing before target");
    }
    sum += term;
    if (mag < eps) break;
    prev_mag = mag;
    have_prev = true;
    if (i == 512) throw std::runtime_error("em_sum: tail did not converge");
  }
  return sum.rounded_to(digits);
}

big_float eval_zeta(long k, int digits) {
  if (k < 2) throw std::domain_error("eval_zeta: requires k >= 2");
  return em_sum(k, rational(1), digits);
}

big_float polygamma_series(long k, const rational& z, int digits) {
  if (k < 1) throw std::domain_error("polygamma_series: requires k >= 1");
  if (z.sign() <= 0) throw std::domain_error("polygamma_series: requires z > 0");
  const int W = digits + big_float::guard_digits;
  big_float s = em_sum(k + 1, z, W);
  big_float kf = big_float::from_integer(factorial(static_cast<unsigned long>(k)), W);
  big_float r = kf * s;
  if (k % 2 == 0) r = -r;  // (-1)^(k+1)
  return r.rounded_to(digits);
}

std::pair<big_float, big_float> eval_sinh_cosh(const big_float& x, int digits) {
  const int W = digits + big_float::guard_digits;
  big_float one = big_float::from_long(1, W);
  if (x.is_zero()) return {big_float(digits), one.rounded_to(digits)};
  big_float ax = abs(x);
  if (cmp(ax, one) < 0) {
    // direct series; no cancellation for |x| < 1
    big_float x2 = x * x;
    big_float eps = big_float::pow10(-(W + 3), W);
    big_float ts = x.rounded_to(W), s = ts;
    big_float tc = one, c = one;
    for (long k = 1; k <= 4 * W + 64; ++k) {
      tc = tc * x2 / ((2 * k - 1) * (2 * k));
      ts = ts * x2 / ((2 * k) * (2 * k + 1));
      c += tc;
      s += ts;
      if (abs(ts) < eps && abs(tc) < eps) break;
    }
    return {s.rounded_to(digits), c.rounded_to(digits)};
  }
  big_float e = exp_bf(x, W);
  big_float i = one / e;
  return {((e - i) / 2).rounded_to(digits), ((e + i) / 2).rounded_to(digits)};
}

big_float incomplete_gamma_int(long m, const rational& a, int digits) {
  if (m < 1) throw std::domain_error("incomplete_gamma_int: requires integer m >= 1");
  const int W = digits + big_float::guard_digits;
  rational s(0);
  rational t(1);
  for (long i = 0; i < m; ++i) {
    if (i > 0) t = t * a / rational(i);
    s += t;
  }
  big_float r = big_float::from_integer(factorial(static_cast<unsigned long>(m - 1)), W) *
                eval_exp(-a, W) * big_float::from_rational(s, W);
  return r.rounded_to(digits);
}

}  // namespace gcf
