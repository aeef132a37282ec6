#include <doctest.h>

#include "gcf/families.hpp"
#include "gcf/special.hpp"
#include "test_util.hpp"

using namespace gcf;
using gcf_test::bf;
using gcf_test::close_abs;

TEST_CASE("family1 closed forms") {
  // [n+3 : -n] = e/(e-2) is (a, k) = (-1, 3)
  CHECK(close_abs(family1_limit({-1, 3}, 35).value, bf(gcf_test::kEOverEm2_40, 45), 33));
  // a = -1, k = 2 gives D = 2 and the value e
  CHECK(close_abs(family1_limit({-1, 2}, 35).value, bf(gcf_test::kE65, 45), 33));
  // a = -k collapses to D = 1: k e^k/(e^k - 1)
  for (long k = 1; k <= 3; ++k) {
    big_float ek = eval_exp(rational(k), 45);
    big_float expected = big_float::from_long(k, 45) * ek / (ek - 1);
    CHECK(close_abs(family1_limit({-k, k}, 35).value, expected, 32));
  }
  // a = 1, k = -1: 1/(e - 1)
  big_float e = eval_exp(rational(1), 45);
  CHECK(close_abs(family1_limit({1, -1}, 35).value, big_float::from_long(1, 45) / (e - 1), 33));
  CHECK_THROWS_AS(family1_limit({0, 2}, 30), std::invalid_argument);
  CHECK_THROWS_AS(family1_limit({-3, 1}, 30), std::invalid_argument);  // D = -1
}

TEST_CASE("family1 closed form vs exact convergents over the whole grid") {
  // the fraction converges factorially fast, so depth 120 is decisive
  for (long a : {-3L, -2L, -1L, 1L, 2L, 3L}) {
    for (long D = 1; D <= 5; ++D) {
      family1_params p{a, D - 1 - a};
      auto pq = pq_convergents(family1_spec(p), 120);
      const auto& c = pq[120];
      REQUIRE(!c.q.is_zero());
      big_float x = big_float::from_rational(c.p, 120) / big_float::from_rational(c.q, 120);
      big_float L = family1_limit(p, 80).value;
      CHECK(abs(x - L.rounded_to(120)) <
            big_float::pow10(-50, 120) * (abs(L.rounded_to(120)) + 1));
    }
  }
}

TEST_CASE("derangement form equals the linear family at a = -1") {
  CHECK(close_abs(family1_derangement_form(2, 35).value, bf(gcf_test::kEOverEm2_40, 45), 33));
  // k = 0: e/(e-1), equal to family1_limit(-1, 1)
  big_float e = eval_exp(rational(1), 45);
  CHECK(close_abs(family1_derangement_form(0, 35).value, e / (e - 1), 32));
  CHECK(close_abs(family1_derangement_form(0, 35).value, family1_limit({-1, 1}, 35).value, 32));
  for (long k = 0; k <= 10; ++k) {
    CHECK(close_abs(family1_derangement_form(k, 35).value, family1_limit({-1, k + 1}, 35).value, 25));
  }
  // k = 1 gives e; convergent oracle
  limit_estimate est = estimate_limit(family1_spec({-1, 2}), 20, 2048);
  CHECK(close_abs(family1_derangement_form(1, 25).value, est.value, 8));
}

TEST_CASE("family1 asymptotic constants") {
  // B_p at (-1, 2): (-a)^(D+1) = 1
  auto [bp12, bq12] = family1_asymptotic_constants({-1, 2});
  CHECK(bp12 == rational(1));
  // ratio check over the grid (also enforced internally)
  for (long a : {-3L, -2L, -1L, 1L, 2L, 3L}) {
    for (long D = 1; D <= 5; ++D) {
      family1_params p{a, D - 1 - a};
      auto [bp, bq] = family1_asymptotic_constants(p);
      big_float ratio = big_float::from_rational(bp, 40) / eval_exact(*bq.exact, 40);
      CHECK(close_abs(ratio, family1_limit(p, 40).value, 25));
    }
  }
}

TEST_CASE("sequence asymptotics: |q(m)| ~ |B_q| e^-a |a|^-(D+1) D m! binom(m+D, D)") {
  // correction is O(1/m); measured as a magnitude ratio because the pole
  // coefficient carries an extra (-1)^(D+1) relative to the B_q convention
  auto normalized_err = [](const family1_params& p, long m) {
    const int W = 60;
    auto pq = pq_convergents(family1_spec(p), m);
    auto [bp, bq] = family1_asymptotic_constants(p);
    const long D = p.D();
    big_float kappa = big_float::from_long(D, W) * eval_exp(rational(-p.a), W) /
                      big_float::from_rational(pow_rat(rational(p.a), D + 1), W);
    big_float lead = eval_exact(*bq.exact, W) * kappa *
                     big_float::from_integer(factorial(static_cast<unsigned long>(m)), W) *
                     big_float::from_integer(binomial(static_cast<unsigned long>(m + D),
                                                      static_cast<unsigned long>(D)), W);
    return abs(abs(big_float::from_rational(pq[static_cast<size_t>(m)].q, W)) / abs(lead) - 1);
  };
  // representative cases with a nonvanishing 1/m correction
  for (family1_params p : {family1_params{-1, 3}, family1_params{2, 1}, family1_params{-2, 4}}) {
    big_float e400 = normalized_err(p, 400);
    big_float e800 = normalized_err(p, 800);
    double ratio = (e800 / e400).to_double();
    CHECK(ratio > 0.3);
    CHECK(ratio < 0.7);
    // m * err stays bounded: the O(1/m) statement itself
    CHECK((e800 * 800) < (e400 * 400) * 2);
  }
  // D = 1 collapses the correction entirely
  CHECK(normalized_err({-2, 2}, 400) < big_float::pow10(-30, 60));
}

TEST_CASE("kummer M basics") {
  CHECK(kummer_M(rational(2), rational(3), rational(0), 30) == big_float::from_long(1, 30));
  // M(1, 1, z) = e^z
  for (const rational& z : {rational(1, 2), rational(2), rational(-3, 2)}) {
    CHECK(close_abs(kummer_M(rational(1), rational(1), z, 35), eval_exp(z, 45), 33));
  }
  CHECK_THROWS_AS(kummer_M(rational(1), rational(0), rational(1), 20), std::invalid_argument);
  CHECK_THROWS_AS(kummer_M(rational(1), rational(-3), rational(1), 20), std::invalid_argument);
  CHECK_THROWS_AS(kummer_M(rational(1), rational(2), rational(1), 40, 5), std::invalid_argument);
}

TEST_CASE("kummer ODE residual by termwise differentiation") {
  // z M'' + (b - z) M' - a M = 0 at 40 digits
  const int P = 40;
  for (const rational& z : {rational(1, 2), rational(1), rational(2)}) {
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 5}, {3, 7}}) {
      auto m = kummer_M_derivs(rational(a), rational(b), z, P + 10);
      big_float zb = big_float::from_rational(z, P + 10);
      big_float resid = zb * m[2] + (big_float::from_long(b, P + 10) - zb) * m[1] - m[0] * a;
      CHECK(abs(resid) < big_float::pow10(-(P - 10), P + 10));
    }
  }
}

TEST_CASE("tricomi U special values") {
  CHECK(close_abs(tricomi_U_special(1, big_float::from_long(1, 30)), big_float::from_long(2, 30), 28));
  CHECK(tricomi_U_special_exact(1, rational(1)) == rational(2));
  CHECK(tricomi_U_special_exact(2, rational(1, 2)) == rational(20));  // 4 * (1 + 4)
  CHECK_THROWS_AS(tricomi_U_special(1, big_float(20)), std::invalid_argument);
}

TEST_CASE("tricomi U pole order at the origin") {
  // z^(D+1) U(D, D+2, z) -> D as z -> 0
  for (long D = 1; D <= 3; ++D) {
    for (long e = 6; e <= 10; e += 2) {
      rational z = pow_rat(rational(1, 10), e);
      rational v = pow_rat(z, D + 1) * tricomi_U_special_exact(D, z);
      CHECK(abs(v - rational(D)) <= z);  // the residue is exactly D + z
    }
  }
}

TEST_CASE("tricomi U solves the Kummer ODE (exact and central differences)") {
  // closed-form derivatives: the residual vanishes identically in exact arithmetic
  for (long D = 1; D <= 3; ++D) {
    for (const rational& z : {rational(1, 2), rational(1), rational(2)}) {
      rational u = tricomi_U_special_exact(D, z);
      rational up = -rational(D) * pow_rat(z, -D - 1) - rational(D * (D + 1)) * pow_rat(z, -D - 2);
      rational upp = rational(D * (D + 1)) * pow_rat(z, -D - 2) +
                     rational(D * (D + 1) * (D + 2)) * pow_rat(z, -D - 3);
      rational resid = z * upp + (rational(D + 2) - z) * up - rational(D) * u;
      CHECK(resid == rational(0));
    }
  }
  // independent oracle: high-precision central differences, h = 10^-(P/3)
  const int P = 40;
  const int W = 2 * P;
  big_float h = big_float::pow10(-(P / 3), W);
  for (long D = 1; D <= 3; ++D) {
    for (long zi : {1L, 2L}) {
      big_float z = big_float::from_long(zi, W);
      big_float u = tricomi_U_special(D, z);
      big_float uph = tricomi_U_special(D, z + h);
      big_float umh = tricomi_U_special(D, z - h);
      big_float up = (uph - umh) / (h * 2);
      big_float upp = (uph - u * 2 + umh) / (h * h);
      big_float resid = z * upp + (big_float::from_long(D + 2, W) - z) * up - u * D;
      CHECK(abs(resid) < big_float::pow10(-(2 * P / 3 - 6), W));
    }
  }
}

TEST_CASE("family2 F series") {
  // F(4,6) = -308 + 840/e
  big_float f46 = family2_F(rational(4), rational(6), 40);
  big_float expected = big_float::from_long(840, 50) / eval_exp(rational(1), 50) - 308;
  CHECK(close_abs(f46, expected, 25));
  CHECK(close_abs(f46, bf(gcf_test::kF46_40, 50), 38));
  // F(a, b) -> 1 as a -> infinity
  big_float fbig = family2_F(rational(1000000), rational(0), 20);
  CHECK(abs(fbig - 1) < big_float::pow10(-5, 30));
  CHECK_THROWS_AS(family2_F(rational(-1), rational(0), 20), std::invalid_argument);
}

TEST_CASE("family2 F matches the hyperbolic form at (6, 9)") {
  // solve the limit identity L = (F + 672)/(F + 42) for F with
  // L = X/(X-4), X = -9 sqrt6 sinh(sqrt6/3) + 18 cosh(sqrt6/3)
  const int W = 50;
  big_float rt6 = sqrt(big_float::from_long(6, W));
  auto [sh, ch] = eval_sinh_cosh(rt6 / 3, W);
  big_float X = ch * 18 - rt6 * sh * 9;
  big_float L = X / (X - 4);
  big_float F_implied = (big_float::from_long(672, W) - L * 42) / (L - 1);
  CHECK(close_abs(family2_F(rational(6), rational(9), 40), F_implied, 20));
}

TEST_CASE("family2 limit") {
  CHECK(close_abs(family2_limit({rational(4), rational(6)}, 40).value,
                  bf(gcf_test::k3Over3mE_45, 50), 30));
  CHECK(close_abs(family2_limit({rational(6), rational(9)}, 40).value,
                  bf(gcf_test::kFam2_69_40, 50), 20));
  CHECK_THROWS_AS(family2_limit({rational(0), rational(1)}, 30), std::invalid_argument);
  CHECK_THROWS_AS(family2_limit({rational(2), rational(-1)}, 30), std::invalid_argument);
}

TEST_CASE("family2 limit matches convergents across the grid") {
  for (long a = 1; a <= 5; ++a) {
    for (long b = 0; b <= 5; ++b) {
      family2_params p{rational(a), rational(b)};
      closed_form_value cf = family2_limit(p, 30);  // throws on cross-check failure
      limit_estimate est = estimate_limit(family2_spec(p), 15, 1024);
      CHECK(close_abs(cf.value, est.value, 6));
    }
  }
}

TEST_CASE("family2 half-integer series") {
  // b/a = m - 1/2 with m = 2, a = 6 gives b = 9
  CHECK(close_abs(family2_halfint_series(rational(6), 2, 35),
                  family2_F(rational(6), rational(9), 40), 25));
  // m = 1, a = 4 gives b = 2
  CHECK(close_abs(family2_halfint_series(rational(4), 1, 35),
                  family2_F(rational(4), rational(2), 40), 25));
  // m = 0 exercises the series identity at b = -a/2
  CHECK(close_abs(family2_halfint_series(rational(4), 0, 30),
                  family2_F(rational(4), rational(-2), 35), 25));
  // k = 0 term of the transformed series equals the k = 0 term 2/2! = 1
  for (long m = 0; m <= 6; ++m) {
    rational first = rational(2) * rational(factorial(static_cast<unsigned long>(4 + 2 * m))) /
                     rational(factorial(static_cast<unsigned long>(m + 2))) *
                     (rational(factorial(static_cast<unsigned long>(m + 2))) /
                      (rational(2) * rational(factorial(static_cast<unsigned long>(2 * m + 4)))));
    CHECK(first == rational(1));
  }
}

TEST_CASE("family3 limit") {
  closed_form_value k3 = family3_limit({3}, 25);
  CHECK(close_abs(k3.value, bf(gcf_test::kInvZeta3_40, 45), 17));
  // k = 2: 6/pi^2
  big_float pi = eval_pi(40);
  CHECK(close_abs(family3_limit({2}, 35).value, big_float::from_long(6, 40) / (pi * pi), 33));
  // k = 20 is within 2^-19 of 1
  big_float k20 = family3_limit({20}, 30).value;
  CHECK(abs(k20 - 1) < big_float::from_rational(rational(1, 1 << 19), 30));
  CHECK_THROWS_AS(family3_limit({1}, 20), std::invalid_argument);
}

TEST_CASE("family3 closed p, q equal the recurrence exactly") {
  for (long k = 2; k <= 5; ++k) {
    auto pq = pq_convergents(family3_spec({k}), 50);
    for (long n = 0; n <= 50; ++n) {
      auto [p, q] = family3_pq_closed(k, n);
      CHECK(rational(p) == pq[static_cast<size_t>(n)].p);
      CHECK(q == pq[static_cast<size_t>(n)].q);
    }
  }
  auto [p1, q1] = family3_pq_closed(3, 1);
  CHECK(p1 == 8);
  CHECK(q1 == rational(9));
  auto [p2, q2] = family3_pq_closed(3, 2);
  CHECK(p2 == 216);
  CHECK(q2 == rational(251));
  auto [p0, q0] = family3_pq_closed(7, 0);
  CHECK(p0 == 1);
  CHECK(q0 == rational(1));
}

TEST_CASE("closed form values re-evaluate consistently at doubled precision") {
  for (const closed_form_value& cf :
       {family1_limit({-1, 3}, 30), family1_limit({2, 1}, 30), family3_limit({3}, 30)}) {
    REQUIRE(cf.exact.has_value());
    big_float hi = eval_exact(*cf.exact, 60);
    CHECK(close_abs(cf.value, hi, 28));
  }
}

TEST_CASE("closed form JSON carries terms and value") {
  closed_form_value cf = family1_limit({-1, 3}, 30);
  std::string j = cf.to_json();
  CHECK(j.find("\"terms\"") != std::string::npos);
  CHECK(j.find("\"den_terms\"") != std::string::npos);
  CHECK(j.find("\"exp\"") != std::string::npos);
  CHECK(j.find("\"precision\":30") != std::string::npos);
}
