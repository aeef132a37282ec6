#include "gcf/scanner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "gcf/special.hpp"

namespace gcf {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<long> unflatten(long idx, int ncoef, long bound) {
  std::vector<long> c(ncoef);
  const long span = 2 * bound + 1;
  for (int i = 0; i < ncoef; ++i) {
    c[i] = idx % span - bound;
    idx /= span;
  }
  return c;
}

double eval_poly_d(const std::vector<long>& c, double n) {
  double r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * n + static_cast<double>(c[i]);
  return r;
}

poly_seq poly_from_longs(const std::vector<long>& c) {
  std::vector<rational> v;
  v.reserve(c.size());
  for (long x : c) v.push_back(rational(x));
  return poly_seq(v);
}

}  // namespace

candidate_enumeration::candidate_enumeration(const scan_config& cfg) {
  if (cfg.max_degree < 0 || cfg.max_degree > 2) {
    throw std::invalid_argument("scan: max_degree must be 0..2");
  }
  if (cfg.coeff_bound < 1) throw std::invalid_argument("scan: coeff_bound must be >= 1");
  const int nc = cfg.max_degree + 1;
  const long total = ipow(2 * cfg.coeff_bound + 1, nc);
  for (long i = 0; i < total; ++i) {
    std::vector<long> c = unflatten(i, nc, cfg.coeff_bound);
    bool pos = true;
    for (int n = 1; n <= 5 && pos; ++n) pos = eval_poly_d(c, n) > 0;
    if (pos) a_list_.push_back(c);
  }
  for (long i = 0; i < total; ++i) {
    std::vector<long> c = unflatten(i, nc, cfg.coeff_bound);
    bool zero = std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
    if (!zero) b_list_.push_back(c);
  }
}

std::pair<std::vector<long>, std::vector<long>> candidate_enumeration::coeffs(long index) const {
  const long nb = static_cast<long>(b_list_.size());
  return {a_list_[static_cast<size_t>(index / nb)], b_list_[static_cast<size_t>(index % nb)]};
}

cf_spec candidate_enumeration::spec(long index) const {
  auto [ac, bc] = coeffs(index);
  return cf_spec{poly_from_longs(ac), poly_from_longs(bc)};
}

big_float named_constant(const std::string& name, int digits) {
  if (name == "e") return eval_exp(rational(1), digits);
  if (name == "pi") return eval_pi(digits);
  if (name == "sqrt2") return sqrt(big_float::from_long(2, digits));
  if (name == "golden") {
    return (sqrt(big_float::from_long(5, digits)) + 1) / 2;
  }
  if (name.rfind("zeta", 0) == 0) {
    long k = std::stol(name.substr(4));
    return eval_zeta(k, digits);
  }
  throw std::invalid_argument("unknown constant '" + name + "'");
}

namespace {

std::array<long, 4> normalize_tuple(std::array<long, 4> t) {
  long g = 0;
  for (long v : t) g = std::gcd(g, std::abs(v));
  if (g > 1) {
    for (long& v : t) v /= g;
  }
  return t;
}

long height(const std::array<long, 4>& t) {
  long h = 0;
  for (long v : t) h = std::max(h, std::abs(v));
  return h;
}

}  // namespace

std::vector<match_result> match_constant(const big_float& x, int trusted_digits,
                                         const scan_config& cfg) {
  if (trusted_digits < 25) {
    throw std::invalid_argument("match_constant: requires >= 25 trusted digits");
  }
  const int W = std::max(x.digits(), trusted_digits + big_float::guard_digits);
  const long B = cfg.moebius_bound;
  const big_float thr = big_float::pow10(-(trusted_digits - 5), W);
  const big_float den_floor = big_float::pow10(-6, W);
  const big_float xw = x.rounded_to(W);

  std::vector<match_result> out;
  std::set<std::pair<std::string, std::array<long, 4>>> seen;

  auto push = [&](const std::string& cname, std::array<long, 4> t, const big_float& resid) {
    t = normalize_tuple(t);
    if (!seen.insert({cname, t}).second) return;
    match_result m;
    m.constant = cname;
    m.mobius = t;
    m.limit_str = xw.to_string(trusted_digits);
    m.limit_digits = trusted_digits;
    m.residual_exp = resid.is_zero() ? -(W - 2) : resid.exponent10();
    out.push_back(std::move(m));
  };

  // pure-rational forms p1/p3, denominator positive
  for (long p3 = 1; p3 <= B; ++p3) {
    big_float y = xw * p3;
    integer p1z = y.to_integer();
    if (!p1z.fits_slong_p()) continue;
    long p1 = p1z.get_si();
    if (std::abs(p1) > B) continue;
    big_float resid = abs(xw - big_float::from_rational(rational(p1, p3), W));
    if (resid < thr) push("rational", {p1, 0, p3, 0}, resid);
  }

  for (const auto& cname : cfg.constants) {
    big_float C = named_constant(cname, W);
    for (long p3 = -B; p3 <= B; ++p3) {
      for (long p4 = -B; p4 <= B; ++p4) {
        if (p3 == 0 && p4 == 0) continue;
        big_float den = C * p4 + p3;
        if (den.sign() <= 0) continue;  // canonical representative has den > 0
        if (abs(den) < den_floor) continue;
        big_float y = xw * den;
        for (long p2 = -B; p2 <= B; ++p2) {
          big_float rem = y - C * p2;
          integer p1z = rem.to_integer();
          if (!p1z.fits_slong_p()) continue;
          long p1 = p1z.get_si();
          if (std::abs(p1) > B) continue;
          if (p2 == 0 && p4 == 0) continue;       // rational forms reported separately
          if (p1 * p4 - p2 * p3 == 0) continue;   // degenerate: value independent of C
          big_float resid = abs(rem - big_float::from_long(p1, W)) / den;
          if (resid < thr) push(cname, {p1, p2, p3, p4}, resid);
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const match_result& a, const match_result& b) {
    long ha = height(a.mobius), hb = height(b.mobius);
    if (ha != hb) return ha < hb;
    if (a.constant != b.constant) return a.constant < b.constant;
    return a.mobius < b.mobius;
  });
  return out;
}

// ---------- scan pipeline ----------

namespace {

// double-precision probe: rescaled p/q recurrence with snapshots at powers of
// two; mirrors the exact classifier closely enough for prefiltering
struct probe_result {
  bool converged = false;
  double value = 0;
  double err = 1;  // absolute accuracy estimate
};

probe_result double_probe(const std::vector<long>& ac, const std::vector<long>& bc, long N) {
  probe_result pr;
  auto pa = [&](long n) { return eval_poly_d(ac, static_cast<double>(n)); };
  auto pb = [&](long n) { return eval_poly_d(bc, static_cast<double>(n)); };
  double p0 = pa(1), q0 = 1.0;
  double p1 = pa(1) * pa(2) + pb(1), q1 = pa(2);
  std::vector<double> g, gprev;  // x at 2^i and 2^i - 1
  double x_prev = 0;
  bool have_prev = false;
  for (long m = 2; m <= N; ++m) {
    double an = pa(m + 1), bn = pb(m);
    double p2 = an * p1 + bn * p0;
    double q2 = an * q1 + bn * q0;
    double s = std::max(std::fabs(p2), std::fabs(q2));
    if (s > 1e250) { p2 /= s; q2 /= s; p1 /= s; q1 /= s; }
    p0 = p1; p1 = p2; q0 = q1; q1 = q2;
    if ((m & (m + 1)) == 0) {  // m = 2^i - 1
      x_prev = (q1 != 0) ? p1 / q1 : std::numeric_limits<double>::quiet_NaN();
      have_prev = true;
    }
    if ((m & (m - 1)) == 0 && m >= 8) {  // m = 2^i
      double x = (q1 != 0) ? p1 / q1 : std::numeric_limits<double>::quiet_NaN();
      g.push_back(x);
      gprev.push_back(have_prev ? x_prev : std::numeric_limits<double>::quiet_NaN());
    }
  }
  const size_t J = g.size();
  if (J < 3) return pr;
  for (double v : g) {
    if (!std::isfinite(v)) return pr;
  }
  double top = g[J - 1], cons = std::fabs(top - gprev[J - 1]);
  if (!std::isfinite(cons)) return pr;
  double scale = std::max(1.0, std::fabs(top));
  double d0 = std::fabs(g[J - 1] - g[J - 2]);
  double d1 = std::fabs(g[J - 2] - g[J - 3]);
  double eps = 1e-13 * scale;
  if (d0 < eps && cons < 4 * std::max(d0, eps)) {
    pr.converged = true;
    pr.value = top;
    pr.err = std::max(cons + d0, 1e-15 * scale);
    return pr;
  }
  if (cons > 4 * d0 + eps) return pr;  // oscillation
  if (d0 <= 0 || d1 <= 0) return pr;
  double t = std::log2(d1 / d0);
  if (t > 11) {
    pr.converged = true;
    pr.value = top;
    pr.err = std::max(d0, 1e-15 * scale);
    return pr;
  }
  // polynomial-looking: Richardson in double over the available ladder
  std::vector<double> lad;  // ladder top-first
  for (size_t j = J; j-- > 0;) lad.push_back(g[j]);
  std::vector<double> ts;
  for (size_t j = 0; j + 2 < lad.size() && ts.size() < 3; ++j) {
    double a = std::fabs(lad[j] - lad[j + 1]);
    double b = std::fabs(lad[j + 1] - lad[j + 2]);
    if (a <= 0 || b <= 0) break;
    ts.push_back(std::log2(b / a));
  }
  if (ts.size() < 2) return pr;
  double mean = std::accumulate(ts.begin(), ts.end(), 0.0) / static_cast<double>(ts.size());
  int r = static_cast<int>(std::lround(mean));
  bool stable = true;
  for (double v : ts) stable = stable && std::fabs(v - mean) < 0.35;
  if (!stable || r < 1 || r > 8 || std::fabs(mean - r) > 0.3) return pr;
  std::vector<double> T = lad;
  double best = T[0], prev = T[0];
  for (size_t s = 1; s < T.size(); ++s) {
    double f = std::pow(2.0, r + static_cast<double>(s) - 1);
    std::vector<double> next;
    for (size_t j = 0; j + 1 < T.size(); ++j) next.push_back(T[j] + (T[j] - T[j + 1]) / (f - 1));
    prev = best;
    best = next[0];
    T = std::move(next);
  }
  pr.converged = true;
  pr.value = best;
  pr.err = std::max(std::fabs(best - prev) * 4, 1e-12 * scale);
  return pr;
}

struct double_library {
  std::vector<std::pair<std::string, double>> consts;
};

// cheap prefilter mirroring match_constant in double arithmetic
bool double_prematch(double x, double err, long B, const double_library& lib) {
  double tol = std::max(err * 8, 1e-12);
  if (tol > 1e-6) return false;  // not accurate enough to certify anything
  for (long p3 = 1; p3 <= B; ++p3) {
    double y = x * static_cast<double>(p3);
    double p1 = std::nearbyint(y);
    if (std::fabs(p1) <= static_cast<double>(B) && std::fabs(y - p1) <= tol * p3) return true;
  }
  for (const auto& [name, C] : lib.consts) {
    for (long p3 = -B; p3 <= B; ++p3) {
      for (long p4 = -B; p4 <= B; ++p4) {
        if (p3 == 0 && p4 == 0) continue;
        double den = static_cast<double>(p3) + C * static_cast<double>(p4);
        if (den <= 1e-9) continue;
        double y = x * den;
        for (long p2 = -B; p2 <= B; ++p2) {
          if (p2 == 0 && p4 == 0) continue;
          double rem = y - C * static_cast<double>(p2);
          double p1 = std::nearbyint(rem);
          if (std::fabs(p1) > static_cast<double>(B)) continue;
          if (p1 * static_cast<double>(p4) - static_cast<double>(p2) * static_cast<double>(p3) == 0) continue;
          if (std::fabs(rem - p1) <= tol * den) return true;
        }
      }
    }
  }
  return false;
}

struct candidate_outcome {
  bool converged = false;
  std::vector<std::string> lines;
  long spurious = 0;
  bool matched = false;
};

std::string record_line(const match_result& m) {
  nlohmann::json j;
  j["a"] = m.a_coeffs;
  j["b"] = m.b_coeffs;
  j["constant"] = m.constant;
  j["mobius"] = m.mobius;
  j["limit"] = m.limit_str;
  j["residual_exp"] = m.residual_exp;
  j["terms_used"] = m.terms_used;
  return j.dump();
}

}  // namespace

scan_summary scan(const scan_config& cfg, const std::string& output_path, bool resume) {
  if (cfg.precision < 25) throw std::invalid_argument("scan: precision must be >= 25");
  if (cfg.moebius_bound < 1) throw std::invalid_argument("scan: moebius_bound must be >= 1");

  candidate_enumeration en(cfg);
  const long total = en.size();

  double_library dlib;
  for (const auto& name : cfg.constants) {
    dlib.consts.emplace_back(name, named_constant(name, 20).to_double());
  }

  const std::string marker_path = output_path + ".resume";
  long start_index = 0;
  if (resume) {
    std::ifstream mf(marker_path);
    long idx = -1;
    if (mf >> idx && idx >= 0) start_index = idx + 1;
  }

  std::ofstream out(output_path, resume && start_index > 0 ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("scan: cannot open output file " + output_path);
  if (start_index == 0) {
    nlohmann::json hdr;
    hdr["_header"] = {{"max_degree", cfg.max_degree},
                      {"coeff_bound", cfg.coeff_bound},
                      {"precision", cfg.precision},
                      {"moebius_bound", cfg.moebius_bound},
                      {"max_terms", cfg.max_terms},
                      {"constants", cfg.constants}};
    out << hdr.dump() << "\n";
    if (!out) throw std::runtime_error("scan: write failure");
  }

  unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  nthreads = std::min(nthreads, 8u);

  auto process = [&](long idx) -> candidate_outcome {
    candidate_outcome oc;
    auto [ac, bc] = en.coeffs(idx);
    probe_result pr = double_probe(ac, bc, 512);
    if (!pr.converged) return oc;
    oc.converged = true;
    if (!double_prematch(pr.value, pr.err, cfg.moebius_bound, dlib)) return oc;

    // exact stage
    cf_spec spec = en.spec(idx);
    limit_estimate est = estimate_limit(spec, cfg.precision, cfg.max_terms);
    if (est.cls == convergence_class::divergent || est.cls == convergence_class::undefined ||
        est.cls == convergence_class::undetermined) {
      oc.converged = false;
      return oc;
    }
    if (est.achieved_digits < 25) return oc;
    std::vector<match_result> ms = match_constant(est.value, est.achieved_digits, cfg);
    if (ms.empty()) return oc;

    // doubled-precision re-verification: a kept match must either
    // re-certify at the tighter threshold or clearly shrink its residual
    limit_estimate est2 = estimate_limit(spec, 2 * cfg.precision, cfg.max_terms * 2);
    const int W2 = est2.value.digits();
    for (auto& m : ms) {
      bool ok = false;
      {
        big_float C2(W2);
        bool rationalC = (m.constant == "rational");
        if (!rationalC) C2 = named_constant(m.constant, W2);
        big_float num = big_float::from_long(m.mobius[0], W2) + (rationalC ? big_float(W2) : C2 * m.mobius[1]);
        big_float den = big_float::from_long(m.mobius[2], W2) + (rationalC ? big_float(W2) : C2 * m.mobius[3]);
        if (!den.is_zero()) {
          big_float resid2 = abs(est2.value - num / den);
          bool certified = est2.achieved_digits >= 25 &&
                           resid2 < big_float::pow10(-(est2.achieved_digits - 5), W2);
          bool shrank = resid2 < big_float::pow10(m.residual_exp - 3, W2);
          if (certified || shrank) {
            ok = true;
            m.residual_exp = resid2.is_zero() ? -(W2 - 2) : resid2.exponent10();
            m.limit_str = est2.value.to_string(std::min(std::max(est2.achieved_digits, m.limit_digits),
                                                        2 * cfg.precision));
            m.limit_digits = std::max(est2.achieved_digits, m.limit_digits);
          }
        }
      }
      if (ok) {
        m.a_coeffs = ac;
        m.b_coeffs = bc;
        m.terms_used = est2.terms_used;
        if (m.constant != "rational") oc.matched = true;
        oc.lines.push_back(record_line(m));
      } else {
        ++oc.spurious;
      }
    }
    return oc;
  };

  scan_summary sum;
  sum.candidates = total;
  const long chunk = 4096;
  for (long base = start_index; base < total; base += chunk) {
    const long end = std::min(base + chunk, total);
    std::vector<candidate_outcome> results(static_cast<size_t>(end - base));
    if (nthreads <= 1) {
      for (long i = base; i < end; ++i) results[static_cast<size_t>(i - base)] = process(i);
    } else {
      std::vector<std::future<void>> futs;
      std::atomic<long> next(base);
      for (unsigned t = 0; t < nthreads; ++t) {
        futs.push_back(std::async(std::launch::async, [&]() {
          while (true) {
            long i = next.fetch_add(1);
            if (i >= end) break;
            results[static_cast<size_t>(i - base)] = process(i);
          }
        }));
      }
      for (auto& f : futs) f.get();
    }
    for (const auto& oc : results) {
      if (oc.converged) ++sum.converged;
      if (oc.matched) ++sum.matched;
      sum.spurious += oc.spurious;
      for (const auto& line : oc.lines) {
        out << line << "\n";
        ++sum.records;
      }
    }
    out.flush();
    if (!out) {
      std::ofstream mf(marker_path, std::ios::trunc);
      mf << (base - 1) << "\n";
      throw std::runtime_error("scan: write failure; resume marker saved");
    }
    std::ofstream mf(marker_path, std::ios::trunc);
    mf << (end - 1) << "\n";
  }
  return sum;
}

}  // namespace gcf
