#include "gcf/report.hpp"

#include <sstream>

#include "gcf/transform.hpp"

namespace gcf {

namespace {

big_float closed_value_at(const report_request& req, int digits) {
  switch (req.family) {
    case 1: return family1_limit(req.f1, digits).value;
    case 2: return family2_limit(req.f2, digits).value;
    default: return family3_limit(req.f3, digits).value;
  }
}

std::string residual_row(const rational& p, const rational& q, const big_float& limit, int W) {
  if (q.is_zero()) return "undefined (q = 0)";
  big_float x = big_float::from_rational(p, W) / big_float::from_rational(q, W);
  big_float r = abs(x - limit);
  return r.is_zero() ? std::string("< 1e-") + std::to_string(W - 10) : r.to_string(4);
}

}  // namespace

std::string build_report(const report_request& req) {
  cf_spec spec;
  closed_form_value cf;
  std::string family_desc;
  switch (req.family) {
    case 1:
      spec = family1_spec(req.f1);
      cf = family1_limit(req.f1, req.precision);
      family_desc = "family 1 (linear), a = " + std::to_string(req.f1.a) +
                    ", k = " + std::to_string(req.f1.k) + ", D = " + std::to_string(req.f1.D());
      break;
    case 2:
      spec = family2_spec(req.f2);
      cf = family2_limit(req.f2, req.precision);
      family_desc = "family 2 (quadratic), a = " + req.f2.a.to_string() +
                    ", b = " + req.f2.b.to_string();
      break;
    case 3:
      spec = family3_spec(req.f3);
      cf = family3_limit(req.f3, req.precision);
      family_desc = "family 3 (zeta), k = " + std::to_string(req.f3.k);
      break;
    default:
      throw std::invalid_argument("build_report: family must be 1, 2, or 3");
  }

  std::ostringstream md;
  md << "# Continued fraction verification report\n\n";
  md << "## Fraction\n\n";
  md << "- " << family_desc << "\n";
  md << "- terms: `" << spec.to_string() << "`\n";
  md << "- spec JSON: `" << spec.to_json() << "`\n\n";

  md << "## Closed form\n\n";
  md << "- expression: `" << cf.expr << "`\n";
  md << "- value (" << req.precision << " digits): `" << cf.value.to_string(req.precision)
     << "`\n\n";

  auto pairs = pq_convergents(spec, 200);

  // the linear/quadratic families converge factorially, so resolving a
  // nonzero residual at m = 200 can need several hundred digits
  int Wres = 60;
  big_float L = closed_value_at(req, Wres);
  for (int next : {240, 900}) {
    const auto& deep = pairs[200];
    if (deep.q.is_zero()) break;
    big_float x = big_float::from_rational(deep.p, Wres) / big_float::from_rational(deep.q, Wres);
    if (abs(x - L) > big_float::pow10(-(Wres - 15), Wres)) break;
    Wres = next;
    L = closed_value_at(req, Wres);
  }

  md << "## First eight convergents\n\n";
  md << "| depth | p/q | decimal |\n|---|---|---|\n";
  for (long m = 0; m < 8; ++m) {
    const auto& c = pairs[static_cast<size_t>(m)];
    if (c.q.is_zero()) {
      md << "| " << (m + 1) << " | " << c.p.to_string() << "/0 | undefined |\n";
      continue;
    }
    rational v = c.p / c.q;
    big_float d = big_float::from_rational(v, 20);
    md << "| " << (m + 1) << " | " << v.to_string() << " | " << d.to_string(15) << " |\n";
  }
  md << "\n## Residuals against the closed form\n\n";
  md << "| m | abs(p(m)/q(m) - L) |\n|---|---|\n";
  for (long m : {50L, 100L, 200L}) {
    const auto& c = pairs[static_cast<size_t>(m)];
    md << "| " << m << " | " << residual_row(c.p, c.q, L, Wres) << " |\n";
  }

  // invariant checklist
  bool det_ok = true;
  rational bprod(1);
  for (long n = 0; n <= 30; ++n) {
    bprod *= spec.b.eval(n + 1);
    rational lhs = pairs[static_cast<size_t>(n)].p * pairs[static_cast<size_t>(n + 1)].q -
                   pairs[static_cast<size_t>(n + 1)].p * pairs[static_cast<size_t>(n)].q;
    rational rhs = (n % 2 == 0) ? -bprod : bprod;
    if (lhs != rhs) det_ok = false;
  }
  bool consistency_ok = true;
  for (long m = 1; m <= 30; ++m) {
    const auto& c = pairs[static_cast<size_t>(m)];
    if (c.q.is_zero()) continue;
    if (c.p / c.q != eval_finite(instantiate(spec, m + 1))) consistency_ok = false;
  }
  limit_estimate est = estimate_limit(spec, std::min(req.precision, 30), 16384);
  big_float diff = abs(est.value - cf.value.rounded_to(est.value.digits()));
  long resid_exp = diff.is_zero() ? -(est.value.digits() - 2) : diff.exponent10();
  bool cross_ok = est.achieved_digits >= 6 && resid_exp <= -6;

  md << "\n## Checks\n\n";
  md << "- determinant identity, n <= 30: " << (det_ok ? "PASS" : "FAIL") << "\n";
  md << "- convergent consistency p(m)/q(m) = depth-(m+1) value, m <= 30: "
     << (consistency_ok ? "PASS" : "FAIL") << "\n";
  md << "- closed form vs convergent limit (" << to_string(est.cls)
     << ", residual exponent " << resid_exp << "): " << (cross_ok ? "PASS" : "FAIL") << "\n";
  return md.str();
}

}  // namespace gcf
