#include "gcf/limits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace gcf {

std::string to_string(convergence_class c) {
  switch (c) {
    case convergence_class::geometric: return "geometric";
    case convergence_class::polynomial: return "polynomial";
    case convergence_class::undetermined: return "undetermined";
    case convergence_class::divergent: return "divergent";
    case convergence_class::undefined: return "undefined";
  }
  return "?";
}

std::pair<big_float, big_float> richardson_ladder(const std::vector<big_float>& g, int r) {
  std::vector<big_float> T = g;
  big_float best = T[0];
  big_float corr = abs(T[0]);  // placeholder until first pass
  for (size_t s = 1; s < g.size(); ++s) {
    const int digits = T[0].digits();
    big_float f = pow_si(big_float::from_long(2, digits), r + static_cast<long>(s) - 1);
    std::vector<big_float> next;
    next.reserve(T.size() - 1);
    for (size_t j = 0; j + 1 < T.size(); ++j) {
      next.push_back(T[j] + (T[j] - T[j + 1]) / (f - 1));
    }
    corr = abs(next[0] - best);
    best = next[0];
    T = std::move(next);
  }
  return {best, corr};
}

namespace {

int digits_from_abs_residual(const big_float& res, int cap) {
  if (res.is_zero()) return cap;
  long e = res.exponent10();  // |res| in [10^(e-1), 10^e)
  long d = -e;
  if (d < 0) d = 0;
  if (d > cap) d = cap;
  return static_cast<int>(d);
}

}  // namespace

limit_estimate estimate_limit(const cf_spec& spec, int precision, long max_terms,
                              long gap_threshold) {
  if (precision < big_float::min_digits) precision = big_float::min_digits;
  const int W = precision + big_float::guard_digits + 30;
  limit_estimate out;
  out.value = big_float(W);

  long N = 64;
  while (N * 2 <= max_terms) N *= 2;
  if (max_terms < 64) N = 16;

  // rolling exact recurrence with snapshots at m in {2^i - 1, 2^i}
  std::map<long, std::optional<big_float>> snap;
  auto want = [&](long m) { return m >= 2 && ((m & (m - 1)) == 0 || ((m + 1) & m) == 0); };

  rational p0 = spec.a.eval(1), q0(1);
  rational a2 = spec.a.eval(2);
  rational p1 = p0 * a2 + spec.b.eval(1), q1 = a2;
  long zeroq = 0;
  long stop_at = N;
  const big_float conv_eps = big_float::pow10(-(precision + 2), W);

  long m = 1;
  for (m = 2; m <= N; ++m) {
    rational an = spec.a.eval(m + 1);
    rational bn = spec.b.eval(m);
    rational p2 = an * p1 + bn * p0;
    rational q2 = an * q1 + bn * q0;
    p0 = std::move(p1); p1 = std::move(p2);
    q0 = std::move(q1); q1 = std::move(q2);
    if (q1.is_zero()) ++zeroq;
    if (want(m)) {
      if (q1.is_zero()) {
        snap[m] = std::nullopt;
      } else {
        snap[m] = big_float::from_rational(p1, W) / big_float::from_rational(q1, W);
      }
    }
    if (zeroq > gap_threshold) {
      out.cls = convergence_class::undefined;
      out.terms_used = m;
      out.zero_q_count = zeroq;
      out.note = "persistent vanishing q(m)";
      return out;
    }
    // early stop once converged at the requested precision
    if (m >= 64 && (m & (m - 1)) == 0) {
      auto cur = snap[m];
      auto prev = snap[m - 1];
      auto halfway = snap[m / 2];
      if (cur && prev && halfway) {
        big_float scale = abs(*cur) + 1;
        if (abs(*cur - *prev) < conv_eps * scale && abs(*cur - *halfway) < conv_eps * scale) {
          stop_at = m;
          break;
        }
      }
    }
  }
  if (m > N) m = N;
  out.terms_used = std::min(m, stop_at);
  out.zero_q_count = zeroq;
  const long top = out.terms_used;

  // ladder values g[j] at depths top/2^j (falling back one step at gaps)
  std::vector<big_float> g;
  std::vector<long> gm;
  for (long d = top; d >= 8; d /= 2) {
    auto it = snap.find(d);
    if (it != snap.end() && it->second) {
      g.push_back(*it->second);
      gm.push_back(d);
    } else {
      auto it2 = snap.find(d - 1);
      if (it2 != snap.end() && it2->second) {
        g.push_back(*it2->second);
        gm.push_back(d - 1);
      }
    }
  }
  if (g.size() < 3) {
    out.cls = convergence_class::undefined;
    out.note = "too few defined convergents";
    return out;
  }

  const big_float scale = abs(g[0]) + 1;
  const big_float noise = big_float::pow10(-(W - 5), W) * scale;

  std::vector<big_float> delta;
  for (size_t j = 0; j + 1 < g.size(); ++j) delta.push_back(abs(g[j] - g[j + 1]));

  // consecutive differences at the top and at half depth, for oscillation
  // detection and per-step ratio estimation
  auto cons_at = [&](long d) -> std::optional<big_float> {
    auto a = snap.find(d);
    auto b = snap.find(d - 1);
    if (a != snap.end() && a->second && b != snap.end() && b->second) {
      return abs(*a->second - *b->second);
    }
    return std::nullopt;
  };
  std::optional<big_float> c_top = cons_at(top);
  std::optional<big_float> c_half = cons_at(top / 2);

  // divergence: values blowing up along the ladder
  if (abs(g[0]) > big_float::pow10(25, W) * (abs(g.back()) + 1)) {
    out.cls = convergence_class::divergent;
    out.note = "convergents grow without bound";
    return out;
  }

  // converged to working precision
  if (delta[0] < noise * 4 && c_top && *c_top < noise * 4) {
    out.cls = convergence_class::geometric;
    out.value = g[0].rounded_to(precision + big_float::guard_digits);
    big_float res = *c_top + delta[0] + noise;
    out.achieved_digits = digits_from_abs_residual(res, precision);
    out.note = "converged to working precision";
    return out;
  }

  // oscillation without contraction: consecutive gap dwarfs ladder drift
  if (c_top && *c_top > delta[0] * 4 + noise && *c_top > noise * 100) {
    out.cls = convergence_class::divergent;
    out.note = "oscillation without contraction";
    return out;
  }

  // per-doubling log2 ratios from the top of the ladder
  std::vector<double> ts;
  for (size_t j = 0; j + 1 < delta.size() && ts.size() < 3; ++j) {
    if (delta[j] < noise) break;
    if (delta[j + 1].is_zero()) break;
    double lr = (static_cast<double>(delta[j + 1].exponent10()) -
                 static_cast<double>(delta[j].exponent10())) *
                3.321928094887362;
    double fine = std::log2(std::fabs((delta[j + 1] / delta[j]).to_double()));
    // use the exponent-based estimate when the double division over/underflows
    ts.push_back(std::isfinite(fine) ? fine : lr);
  }

  auto finish_geometric = [&](double step_ratio) {
    out.cls = convergence_class::geometric;
    out.value = g[0].rounded_to(precision + big_float::guard_digits);
    big_float res = delta[0] + noise;
    if (c_top && step_ratio > 0 && step_ratio < 0.95) {
      double amp = step_ratio / (1.0 - step_ratio);
      res = *c_top * big_float::from_double(std::max(amp, 1.0), W) + noise;
    }
    out.achieved_digits = digits_from_abs_residual(res, precision);
  };

  // decay accelerating along the ladder: geometric or faster
  if (!ts.empty() && ts[0] > 11.0 && (ts.size() < 2 || ts[1] > 6.0)) {
    finish_geometric(0.0);
    out.note = "fast geometric decay";
    return out;
  }
  // slow geometric: per-step contraction visible in consecutive differences;
  // the cut stays clear of polynomial orders up to 10 (ratio 2^-11 per level)
  if (c_top && c_half && !c_half->is_zero() && *c_top > noise) {
    double lr = (static_cast<double>(c_top->exponent10()) -
                 static_cast<double>(c_half->exponent10())) * 3.321928094887362;
    double fine = std::log2(std::fabs((*c_top / *c_half).to_double()));
    double le = std::isfinite(fine) ? fine : lr;
    if (le < -std::max(12.0, 0.0146 * static_cast<double>(top))) {
      double step = std::exp2(le * 2.0 / static_cast<double>(top));
      finish_geometric(step);
      out.note = "geometric decay";
      return out;
    }
  }

  if (ts.size() >= 2) {
    double mean = 0;
    for (double t : ts) mean += t;
    mean /= static_cast<double>(ts.size());
    bool stable = true;
    for (double t : ts) stable = stable && std::fabs(t - mean) < 0.35;
    int r = static_cast<int>(std::lround(mean));
    if (stable && r >= 1 && r <= 10 && std::fabs(mean - r) < 0.3) {
      auto [val, corr] = richardson_ladder(g, r);
      out.cls = convergence_class::polynomial;
      out.poly_order = r;
      out.value = val.rounded_to(precision + big_float::guard_digits);
      out.achieved_digits = digits_from_abs_residual(corr + noise, precision);
      out.note = "accelerated";
      return out;
    }
    if (mean < 0.05 && delta[0] > scale * big_float::pow10(-3, W)) {
      out.cls = convergence_class::divergent;
      out.note = "differences not contracting";
      return out;
    }
  }

  // ladder drift and last-step gap both large after the full depth budget:
  // bouncing between values rather than settling
  if (c_top && *c_top > scale * big_float::pow10(-2, W) &&
      delta[0] > scale * big_float::pow10(-2, W)) {
    out.cls = convergence_class::divergent;
    out.note = "oscillation without contraction";
    return out;
  }

  out.cls = convergence_class::undetermined;
  out.value = g[0].rounded_to(precision + big_float::guard_digits);
  out.achieved_digits = 0;
  out.note = "no stable classification";
  return out;
}

}  // namespace gcf
