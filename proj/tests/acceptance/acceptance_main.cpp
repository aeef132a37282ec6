// Acceptance runner: executes every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria. Checks are always on; nothing is compiled out.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gcf/cf.hpp"
#include "gcf/families.hpp"
#include "gcf/limits.hpp"
#include "gcf/scanner.hpp"
#include "gcf/special.hpp"
#include "gcf/transform.hpp"

using namespace gcf;

namespace {

struct outcome {
  bool pass = true;
  std::string detail;
};

cf_spec spec_of(const std::string& a, const std::string& b) {
  return cf_spec{poly_seq::parse(a), poly_seq::parse(b)};
}

bool within(const big_float& x, const big_float& y, int tol_exp) {
  return abs(x - y) < big_float::pow10(-tol_exp, std::max(x.digits(), y.digits()));
}

// exact convergent value p(m)/q(m) at the requested (very high) precision
std::map<long, big_float> convergents_at(const cf_spec& spec, const std::vector<long>& ms, int W) {
  std::map<long, big_float> out;
  long need = 0;
  for (long m : ms) need = std::max(need, m);
  auto a = [&](long n) { return spec.a.eval(n); };
  auto b = [&](long n) { return spec.b.eval(n); };
  rational p0 = a(1), q0(1);
  rational p1 = a(1) * a(2) + b(1), q1 = a(2);
  for (long m = 2; m <= need; ++m) {
    rational p2 = a(m + 1) * p1 + b(m) * p0;
    rational q2 = a(m + 1) * q1 + b(m) * q0;
    p0 = std::move(p1); p1 = std::move(p2);
    q0 = std::move(q1); q1 = std::move(q2);
    for (long want : ms) {
      if (m == want && !q1.is_zero()) {
        out.emplace(m, big_float::from_rational(p1, W) / big_float::from_rational(q1, W));
      }
    }
  }
  return out;
}

// ---- criteria ----

outcome c1_exact_anchors() {
  outcome o;
  std::vector<std::pair<rational, rational>> golden(10, {rational(1), rational(1)});
  bool a = eval_finite(golden) == rational(89, 55);
  bool b = eval_finite({{rational(1), rational(1)}, {rational(6), rational(1)},
                        {rational(6), rational(1)}}) == rational(43, 37);
  std::vector<std::pair<rational, rational>> euler;
  for (long i = 1; i <= 20; ++i) euler.emplace_back(rational(4 * i - 2), rational(1));
  bool c = eval_finite(euler) == rational(integer("376958612213530151806235679061"),
                                          integer("174199042280794948413485144460"));
  o.pass = a && b && c;
  o.detail = "89/55, 43/37, 20-term ratio all exact";
  return o;
}

outcome c2_euler_constant() {
  outcome o;
  const int W = 80;
  std::vector<std::pair<rational, rational>> euler;
  for (long i = 1; i <= 20; ++i) euler.emplace_back(rational(4 * i - 2), rational(1));
  big_float x = big_float::from_rational(eval_finite(euler), W);
  big_float e = eval_exp(rational(1), W + 5);
  big_float target = (e + 1) / (e - 1);
  big_float diff = abs(x - target);
  o.pass = diff < big_float::pow10(-59, W);
  o.detail = "|x20 - (e+1)/(e-1)| ~ 1e" + std::to_string(diff.exponent10());
  return o;
}

outcome c3_family1_grid() {
  outcome o;
  const int Wband = 14200;  // errors at depth 4000 sit near 1e-13000
  int matched = 0, in_band = 0, total = 0;
  long sample_ratio_exp = 0;
  std::map<long, big_float> exp_cache;
  for (long a : {-3L, -2L, -1L, 1L, 2L, 3L}) {
    big_float ea = eval_exp(rational(a), Wband + 20);
    for (long D = 1; D <= 5; ++D) {
      ++total;
      family1_params p{a, D - 1 - a};
      cf_spec spec = family1_spec(p);
      limit_estimate est = estimate_limit(spec, 30, 8192);
      big_float Lref = family1_limit(p, 40).value;
      if (within(est.value, Lref.rounded_to(est.value.digits()), 8)) ++matched;

      // closed form at band precision: a^D / ((D-1)! (e^a - S))
      rational S(0), t(1);
      for (long s = 0; s < D; ++s) {
        if (s > 0) t = t * rational(a) / rational(s);
        S += t;
      }
      big_float L = big_float::from_rational(pow_rat(rational(a), D), Wband) /
                    (big_float::from_integer(factorial(static_cast<unsigned long>(D - 1)), Wband) *
                     (ea - big_float::from_rational(S, Wband)));
      auto xs = convergents_at(spec, {2000, 4000}, Wband);
      if (xs.count(2000) && xs.count(4000)) {
        big_float e2000 = abs(xs.at(2000) - L);
        big_float e4000 = abs(xs.at(4000) - L);
        if (!e2000.is_zero() && !e4000.is_zero()) {
          long rexp = e4000.exponent10() - e2000.exponent10();
          if (a == -1 && D == 3) sample_ratio_exp = rexp;
          big_float lo = e2000 * big_float::from_rational(rational(2, 5), Wband);
          big_float hi = e2000 * big_float::from_rational(rational(3, 5), Wband);
          if (e4000 >= lo && e4000 <= hi) ++in_band;
        }
      }
    }
  }
  bool limits_ok = (matched == total);
  bool band_ok = (in_band == total);
  o.pass = limits_ok && band_ok;
  std::ostringstream d;
  d << "limits " << matched << "/" << total << " within 1e-8; "
    << "error-ratio band [0.40,0.60] at m=2000 holds for " << in_band << "/" << total
    << " (measured e_4000/e_2000 ~ 1e" << sample_ratio_exp
    << ": the fraction converges factorially, far below the band)";
  o.detail = d.str();
  return o;
}

outcome c4_e_over_em2_pin() {
  outcome o;
  // [n+3 : -n] is the linear family at a = -1, k = 3 (D = 3)
  big_float closed = family1_limit({-1, 3}, 40).value;
  limit_estimate est = estimate_limit(spec_of("n+3", "-n"), 30, 8192);
  bool agree = within(closed.rounded_to(est.value.digits()), est.value, 8);
  // same number from the derangement form at k = 2
  bool der = within(family1_derangement_form(2, 40).value, closed, 25);
  // parameter-convention anchor: (a, k) = (-1, 2) evaluates to e itself
  bool conv = within(family1_limit({-1, 2}, 40).value, eval_exp(rational(1), 45), 30);
  o.pass = agree && der && conv;
  big_float diff = abs(closed.rounded_to(est.value.digits()) - est.value);
  o.detail = "closed form vs convergents ~ 1e" +
             std::to_string(diff.is_zero() ? -99 : diff.exponent10()) +
             std::string(der ? "; derangement route agrees" : "; derangement route DISAGREES");
  return o;
}

outcome c5_family2_pins() {
  outcome o;
  const int W = 45;
  big_float e = eval_exp(rational(1), W);
  big_float target46 = big_float::from_long(3, W) / (big_float::from_long(3, W) - e);
  big_float v46 = family2_limit({rational(4), rational(6)}, 40).value;
  bool a_ok = within(v46, target46, 30);

  big_float rt6 = sqrt(big_float::from_long(6, W));
  auto [sh, ch] = eval_sinh_cosh(rt6 / 3, W);
  big_float X = ch * 18 - rt6 * sh * 9;
  big_float target69 = X / (X - 4);
  big_float v69 = family2_limit({rational(6), rational(9)}, 40).value;
  bool b_ok = within(v69, target69, 20);

  // error-ratio band at m = 500 for (4, 6)
  const int Wband = 4400;
  cf_spec spec = family2_spec({rational(4), rational(6)});
  big_float eW = eval_exp(rational(1), Wband + 10);
  big_float L = big_float::from_long(3, Wband) / (big_float::from_long(3, Wband) - eW);
  auto xs = convergents_at(spec, {500, 1000}, Wband);
  bool band_ok = false;
  long rexp = 0;
  if (xs.count(500) && xs.count(1000)) {
    big_float e500 = abs(xs.at(500) - L);
    big_float e1000 = abs(xs.at(1000) - L);
    if (!e500.is_zero() && !e1000.is_zero()) {
      rexp = e1000.exponent10() - e500.exponent10();
      band_ok = (e1000 >= e500 * big_float::from_rational(rational(1, 5), Wband)) &&
                (e1000 <= e500 * big_float::from_rational(rational(3, 10), Wband));
    }
  }
  o.pass = a_ok && b_ok && band_ok;
  std::ostringstream d;
  d << "(4,6) = 3/(3-e) to 1e-30: " << (a_ok ? "yes" : "NO")
    << "; (6,9) matches hyperbolic quotient to 1e-20: " << (b_ok ? "yes" : "NO")
    << "; ratio band [0.20,0.30] at m=500: " << (band_ok ? "yes" : "no")
    << " (measured e_1000/e_500 ~ 1e" << rexp << ", factorial decay)";
  o.detail = d.str();
  return o;
}

outcome c6_halfint_series() {
  outcome o;
  big_float lhs = family2_halfint_series(rational(6), 2, 40);
  big_float rhs = family2_F(rational(6), rational(9), 40);
  o.pass = within(lhs, rhs, 25);
  big_float diff = abs(lhs - rhs);
  o.detail = "transformed series vs F(6,9) ~ 1e" +
             std::to_string(diff.is_zero() ? -99 : diff.exponent10());
  return o;
}

outcome c7_family3() {
  outcome o;
  auto pq = pq_convergents(family3_spec({3}), 3);
  bool depth4 = (pq[3].p / pq[3].q == rational(1728, 2035));

  bool closed_ok = true;
  for (long k = 2; k <= 5 && closed_ok; ++k) {
    auto rec = pq_convergents(family3_spec({k}), 50);
    for (long n = 0; n <= 50; ++n) {
      auto [p, q] = family3_pq_closed(k, n);
      if (rational(p) != rec[static_cast<size_t>(n)].p || q != rec[static_cast<size_t>(n)].q) {
        closed_ok = false;
        break;
      }
    }
  }

  int lim_ok = 0;
  for (long k : {2L, 3L, 4L}) {
    limit_estimate est = estimate_limit(family3_spec({k}), 12, 4096);
    big_float target = big_float::from_long(1, 40) / eval_zeta(k, 40);
    if (within(est.value, target, 6)) ++lim_ok;
  }
  o.pass = depth4 && closed_ok && (lim_ok == 3);
  std::ostringstream d;
  d << "depth-4 = 1728/2035: " << (depth4 ? "yes" : "NO")
    << "; closed p,q == recurrence (k<=5, n<=50): " << (closed_ok ? "yes" : "NO")
    << "; extrapolated 1/zeta(k) matches for " << lim_ok << "/3";
  o.detail = d.str();
  return o;
}

outcome c8_derangement() {
  outcome o;
  const int P = 60;
  big_float e = eval_exp(rational(1), P);
  bool id_ok = true;
  for (long k = 0; k <= 12; ++k) {
    rational s(0), t(1);
    for (long i = 0; i <= k; ++i) {
      if (i > 0) t = t * rational(-1) / rational(i);
      s += t;
    }
    big_float lhs = e * big_float::from_rational(rational(factorial(static_cast<unsigned long>(k))) * s, P);
    big_float rhs = e * big_float::from_integer(derangement(static_cast<unsigned long>(k)), P);
    if (!(abs(lhs - rhs) < big_float::pow10(-40, P))) id_ok = false;
  }
  bool form_ok = true;
  for (long k = 0; k <= 10; ++k) {
    if (!within(family1_derangement_form(k, 35).value, family1_limit({-1, k + 1}, 35).value, 25)) {
      form_ok = false;
    }
  }
  o.pass = id_ok && form_ok;
  o.detail = std::string("e k! sum = e D_k to 1e-40 for k <= 12: ") + (id_ok ? "yes" : "NO") +
             "; derangement form = linear family at a=-1 for k <= 10: " + (form_ok ? "yes" : "NO");
  return o;
}

outcome c9_determinant() {
  outcome o;
  std::vector<cf_spec> zoo = {
      spec_of("1", "1"),          spec_of("4*n-2", "1"),
      spec_of("n+3", "-n"),       spec_of("n+2", "-n"),
      spec_of("3*n", "-n*(2*n-1)"),
      spec_of("4*n^2+6*n+1", "-4*n^2-6*n"),
      spec_of("6*n^2+9*n+1", "-6*n^2-9*n"),
      spec_of("(n-1)^3+n^3", "-n^6"),
      spec_of("2", "1"),          spec_of("3/2", "-1/2"),
  };
  bool all = true;
  for (const auto& spec : zoo) {
    auto pq = pq_convergents(spec, 31);
    rational bprod(1);
    for (long n = 0; n <= 30; ++n) {
      bprod *= spec.b.eval(n + 1);
      rational lhs = pq[static_cast<size_t>(n)].p * pq[static_cast<size_t>(n + 1)].q -
                     pq[static_cast<size_t>(n + 1)].p * pq[static_cast<size_t>(n)].q;
      rational rhs = (n % 2 == 0) ? -bprod : bprod;
      if (lhs != rhs) all = false;
    }
  }
  o.pass = all;
  o.detail = "p(n)q(n+1) - p(n+1)q(n) = (-1)^(n+1) prod b(j), exact over the spec zoo";
  return o;
}

outcome c10_scanner() {
  outcome o;
  scan_config cfg;
  cfg.max_degree = 2;
  cfg.coeff_bound = 6;
  cfg.precision = 30;
  cfg.moebius_bound = 8;
  cfg.max_terms = 16384;
  cfg.threads = 0;  // all available
  const std::string path = "acceptance_scan.jsonl";
  scan_summary s = scan(cfg, path);

  bool found_pi = false, found_e = false;
  {
    std::ifstream f(path);
    std::string line;
    while (std::getline(f, line)) {
      if (line.find("\"a\":[0,3,0]") != std::string::npos &&
          line.find("\"b\":[0,1,-2]") != std::string::npos &&
          line.find("\"constant\":\"pi\"") != std::string::npos &&
          line.find("\"mobius\":[4,0,-8,3]") != std::string::npos) {
        found_pi = true;
      }
      if (line.find("\"a\":[3,1,0]") != std::string::npos &&
          line.find("\"b\":[0,-1,0]") != std::string::npos &&
          line.find("\"constant\":\"e\"") != std::string::npos &&
          line.find("\"mobius\":[0,1,-2,1]") != std::string::npos) {
        found_e = true;
      }
    }
  }
  std::remove(path.c_str());
  std::remove((path + ".resume").c_str());
  // every emitted record passed the doubled-precision recheck by construction;
  // s.spurious counts candidates the recheck excluded
  o.pass = found_pi && found_e;
  std::ostringstream d;
  d << "4/(3pi-8) found: " << (found_pi ? "yes" : "NO") << "; e/(e-2) found: "
    << (found_e ? "yes" : "NO") << "; excluded by recheck: " << s.spurious << "; candidates "
    << s.candidates << ", converged " << s.converged << ", records " << s.records;
  o.detail = d.str();
  return o;
}

outcome c11_ode_residuals() {
  outcome o;
  const int P = 40;
  const int W = P + 10;
  bool all = true;
  for (const rational& z : {rational(1, 2), rational(1), rational(2)}) {
    big_float zb = big_float::from_rational(z, W);
    auto m = kummer_M_derivs(rational(1), rational(2), z, W);
    big_float rm = zb * m[2] + (big_float::from_long(2, W) - zb) * m[1] - m[0];
    if (!(abs(rm) < big_float::pow10(-30, W))) all = false;
    for (long D = 1; D <= 3; ++D) {
      auto u = tricomi_U_derivs(D, zb);
      big_float ru = zb * u[2] + (big_float::from_long(D + 2, W) - zb) * u[1] - u[0] * D;
      if (!(abs(ru) < big_float::pow10(-30, W))) all = false;
    }
  }
  o.pass = all;
  o.detail = "z w'' + (b-z) w' - a w below 1e-30 for M(1,2,z) and U(D,D+2,z)";
  return o;
}

outcome c12_euler_oracle() {
  outcome o;
  bool all = true;
  for (const char* xs : {"1/4", "1/2", "3/4"}) {
    poly_seq r = poly_seq::parse(xs);
    limit_estimate ev = euler_value(r, 40);
    if (ev.cls != convergence_class::geometric) all = false;
    if (!within(ev.value, big_float::from_long(1, 50), 30)) all = false;
    cf_spec spec{r + poly_seq(rational(1)), -r};
    limit_estimate cf = estimate_limit(spec, 40, 4096);
    if (!within(ev.value, cf.value, 30)) all = false;
  }
  o.pass = all;
  o.detail = "series value = 1 and matches [x+1 : -x] convergents to 1e-30";
  return o;
}

}  // namespace

int main() {
  struct entry {
    int id;
    const char* name;
    std::function<outcome()> fn;
  };
  std::vector<entry> entries = {
      {1, "exact finite-fraction anchors", c1_exact_anchors},
      {2, "20-term ratio vs (e+1)/(e-1) at 80 digits", c2_euler_constant},
      {3, "linear family grid: limits and error-ratio band", c3_family1_grid},
      {4, "e/(e-2) pin: closed form vs convergents", c4_e_over_em2_pin},
      {5, "quadratic family pins and error-ratio band", c5_family2_pins},
      {6, "half-integer series identity", c6_halfint_series},
      {7, "zeta family: exact p,q and extrapolated limits", c7_family3},
      {8, "derangement identities", c8_derangement},
      {9, "determinant invariant", c9_determinant},
      {10, "scanner rediscovery", c10_scanner},
      {11, "Kummer ODE residuals", c11_ode_residuals},
      {12, "Euler-form series oracle", c12_euler_oracle},
  };

  int failed = 0;
  for (const auto& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %2d (%s): %s  [%.1fs]\n", o.pass ? "PASS" : "FAIL", e.id, e.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed;
}
