#include "gcf/closed_form.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "gcf/special.hpp"

namespace gcf {

std::string to_string(cf_term::basis_kind b) {
  switch (b) {
    case cf_term::basis_kind::one: return "1";
    case cf_term::basis_kind::exp: return "exp";
    case cf_term::basis_kind::sinh: return "sinh";
    case cf_term::basis_kind::cosh: return "cosh";
    case cf_term::basis_kind::zeta: return "zeta";
    case cf_term::basis_kind::pi_pow: return "pi_pow";
  }
  return "?";
}

namespace {

long arg_as_long(const rational& r, const char* what) {
  if (!r.is_integer() || !r.num().fits_slong_p()) {
    throw std::domain_error(std::string(what) + ": integer argument required");
  }
  return r.num().get_si();
}

big_float eval_basis(const cf_term& t, int W) {
  switch (t.basis) {
    case cf_term::basis_kind::one:
      return big_float::from_long(1, W);
    case cf_term::basis_kind::exp:
      return eval_exp(t.arg, W);
    case cf_term::basis_kind::sinh: {
      big_float rt = sqrt(big_float::from_rational(t.arg, W));
      return rt * eval_sinh_cosh(rt, W).first;
    }
    case cf_term::basis_kind::cosh: {
      big_float rt = sqrt(big_float::from_rational(t.arg, W));
      return eval_sinh_cosh(rt, W).second;
    }
    case cf_term::basis_kind::zeta:
      return eval_zeta(arg_as_long(t.arg, "zeta"), W);
    case cf_term::basis_kind::pi_pow:
      return pow_si(eval_pi(W), arg_as_long(t.arg, "pi_pow"));
  }
  throw std::logic_error("eval_basis: bad kind");
}

}  // namespace

big_float eval_terms(const std::vector<cf_term>& terms, int digits) {
  const int W = digits + big_float::guard_digits;
  big_float sum(W);
  for (const auto& t : terms) {
    sum += big_float::from_rational(t.coeff, W) * eval_basis(t, W);
  }
  return sum.rounded_to(digits);
}

big_float eval_exact(const exact_expr& e, int digits) {
  const int W = digits + big_float::guard_digits;
  big_float num = eval_terms(e.num, W);
  if (e.den.empty()) return num.rounded_to(digits);
  big_float den = eval_terms(e.den, W);
  if (den.is_zero()) throw std::domain_error("eval_exact: zero denominator");
  return (num / den).rounded_to(digits);
}

std::string render_terms(const std::vector<cf_term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    const bool unit = (c == rational(1)) && t.basis != cf_term::basis_kind::one;
    if (!unit) os << c.to_string();
    switch (t.basis) {
      case cf_term::basis_kind::one: break;
      case cf_term::basis_kind::exp:
        if (!unit) os << "*";
        os << "exp(" << t.arg.to_string() << ")";
        break;
      case cf_term::basis_kind::sinh:
        if (!unit) os << "*";
        os << "sqrt(" << t.arg.to_string() << ")*sinh(sqrt(" << t.arg.to_string() << "))";
        break;
      case cf_term::basis_kind::cosh:
        if (!unit) os << "*";
        os << "cosh(sqrt(" << t.arg.to_string() << "))";
        break;
      case cf_term::basis_kind::zeta:
        if (!unit) os << "*";
        os << "zeta(" << t.arg.to_string() << ")";
        break;
      case cf_term::basis_kind::pi_pow:
        if (!unit) os << "*";
        os << "pi^" << t.arg.to_string();
        break;
    }
  }
  return os.str();
}

std::string render_exact(const exact_expr& e) {
  std::string num = render_terms(e.num);
  if (e.den.empty()) return num;
  return "(" + num + ") / (" + render_terms(e.den) + ")";
}

std::string closed_form_value::to_json() const {
  nlohmann::json j;
  j["expr"] = expr;
  if (exact) {
    auto terms_json = [](const std::vector<cf_term>& ts) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : ts) {
        arr.push_back({{"coeff", t.coeff.to_string()},
                       {"basis", gcf::to_string(t.basis)},
                       {"arg", t.arg.to_string()}});
      }
      return arr;
    };
    j["terms"] = terms_json(exact->num);
    if (!exact->den.empty()) j["den_terms"] = terms_json(exact->den);
  }
  j["value"] = value.to_string(precision);
  j["precision"] = precision;
  return j.dump();
}

}  // namespace gcf
