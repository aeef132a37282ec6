// gcf: evaluate, verify, and search general continued fractions [a(n) : b(n)].

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gcf/cf.hpp"
#include "gcf/errors.hpp"
#include "gcf/families.hpp"
#include "gcf/limits.hpp"
#include "gcf/report.hpp"
#include "gcf/scanner.hpp"
#include "gcf/special.hpp"
#include "gcf/transform.hpp"

namespace {

constexpr int kExitEval = 2;
constexpr int kExitVerify = 3;
constexpr int kExitArgs = 4;

struct global_opts {
  int precision = 50;
  long max_terms = 100000;
  std::string format = "plain";
};

std::vector<std::pair<gcf::rational, gcf::rational>> parse_simple(const std::string& text) {
  std::vector<std::pair<gcf::rational, gcf::rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t xpos = item.find('x');
    long rep = 1;
    std::string val = item;
    if (xpos != std::string::npos) {
      val = item.substr(0, xpos);
      rep = std::stol(item.substr(xpos + 1));
      if (rep < 1) throw std::invalid_argument("--simple: repeat count must be >= 1");
    }
    gcf::rational a = gcf::rational::from_string(val);
    for (long i = 0; i < rep; ++i) out.emplace_back(a, gcf::rational(1));
  }
  if (out.empty()) throw std::invalid_argument("--simple: no terms");
  return out;
}

std::vector<std::pair<gcf::rational, gcf::rational>> parse_pairs(const std::string& text) {
  std::vector<std::pair<gcf::rational, gcf::rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    size_t comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--pairs: expected 'a,b' items");
    out.emplace_back(gcf::rational::from_string(item.substr(0, comma)),
                     gcf::rational::from_string(item.substr(comma + 1)));
  }
  if (out.empty()) throw std::invalid_argument("--pairs: no terms");
  return out;
}

std::string decimal(const gcf::rational& v, int digits) {
  return gcf::big_float::from_rational(v, digits).to_string(digits);
}

void emit_convergent_rows(const gcf::cf_spec& spec, long K, const global_opts& g,
                          std::ostream& os) {
  auto pairs = gcf::pq_convergents(spec, K - 1);
  nlohmann::json rows = nlohmann::json::array();
  if (g.format == "csv") os << "depth,p,q,value,decimal\n";
  for (const auto& c : pairs) {
    const long depth = c.index + 1;
    const bool defined = !c.q.is_zero();
    std::string value = defined ? (c.p / c.q).to_string() : "undefined";
    std::string dec = defined ? decimal(c.p / c.q, g.precision) : "undefined";
    if (g.format == "json") {
      rows.push_back({{"depth", depth},
                      {"p", c.p.to_string()},
                      {"q", c.q.to_string()},
                      {"value", value},
                      {"decimal", dec}});
    } else if (g.format == "csv") {
      os << depth << "," << c.p.to_string() << "," << c.q.to_string() << "," << value << ","
         << dec << "\n";
    } else {
      os << "K=" << depth << "  p = " << c.p.to_string() << "  q = " << c.q.to_string()
         << "  value = " << value << "  = " << dec << "\n";
    }
  }
  if (g.format == "json") os << rows.dump(2) << "\n";
}

int run_eval_value(const std::vector<std::pair<gcf::rational, gcf::rational>>& pairs,
                   const global_opts& g) {
  gcf::rational v = gcf::eval_finite(pairs);
  if (g.format == "json") {
    nlohmann::json j{{"depth", pairs.size()},
                     {"value", v.to_string()},
                     {"decimal", decimal(v, g.precision)}};
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "depth,value,decimal\n"
              << pairs.size() << "," << v.to_string() << "," << decimal(v, g.precision) << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return 0;
}

gcf::closed_form_value family_closed_form(int id, const gcf::report_request& req) {
  switch (id) {
    case 1: return gcf::family1_limit(req.f1, req.precision);
    case 2: return gcf::family2_limit(req.f2, req.precision);
    case 3: return gcf::family3_limit(req.f3, req.precision);
    default: throw std::invalid_argument("family: id must be 1, 2, or 3");
  }
}

gcf::cf_spec family_spec_of(int id, const gcf::report_request& req) {
  switch (id) {
    case 1: return gcf::family1_spec(req.f1);
    case 2: return gcf::family2_spec(req.f2);
    case 3: return gcf::family3_spec(req.f3);
    default: throw std::invalid_argument("family: id must be 1, 2, or 3");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general continued fraction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  global_opts g;
  app.add_option("--precision", g.precision, "working precision in decimal digits (>= 10)")
      ->check(CLI::Range(10, 100000))
      ->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "depth budget for limit estimation")
      ->check(CLI::Range(16L, 100000000L))
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a finite continued fraction exactly");
  eval_cmd->fallthrough();
  std::string simple_list, pairs_list, a_expr, b_expr;
  long depth_K = 0;
  eval_cmd->add_option("--simple", simple_list, "comma list of partial denominators; 'vxN' repeats v N times");
  eval_cmd->add_option("--pairs", pairs_list, "semicolon list of 'a,b' pairs");
  eval_cmd->add_option("--a", a_expr, "a(n) polynomial expression");
  eval_cmd->add_option("--b", b_expr, "b(n) polynomial expression");
  eval_cmd->add_option("-K,--depth", depth_K, "convergent depth");

  // convergents
  auto* conv_cmd = app.add_subcommand("convergents", "exact p/q table for a spec");
  conv_cmd->fallthrough();
  std::string ca_expr, cb_expr, cspec_json;
  long conv_K = 10;
  conv_cmd->add_option("--a", ca_expr, "a(n) polynomial expression");
  conv_cmd->add_option("--b", cb_expr, "b(n) polynomial expression");
  conv_cmd->add_option("--spec-json", cspec_json, "spec as JSON");
  conv_cmd->add_option("-K,--depth", conv_K, "number of depths")->check(CLI::Range(1L, 1000000L));

  // family
  auto* fam_cmd = app.add_subcommand("family", "evaluate a closed-form family");
  fam_cmd->fallthrough();
  int fam_id = 0;
  long fam_k = 0;
  std::string fam2_a, fam2_b;
  fam_cmd->add_option("id", fam_id, "family id: 1, 2, or 3")->required()->check(CLI::Range(1, 3));
  fam_cmd->add_option("--a", fam2_a, "family 1/2 parameter a");
  fam_cmd->add_option("--b", fam2_b, "family 2 parameter b");
  fam_cmd->add_option("--k", fam_k, "family 1/3 parameter k");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "estimate a spec's limit and match constants");
  ver_cmd->fallthrough();
  std::string va_expr, vb_expr, vconstants;
  long vmoebius = 8;
  ver_cmd->add_option("--a", va_expr, "a(n) polynomial expression")->required();
  ver_cmd->add_option("--b", vb_expr, "b(n) polynomial expression")->required();
  ver_cmd->add_option("--constants", vconstants, "comma list of library constants");
  ver_cmd->add_option("--moebius-bound", vmoebius, "coefficient bound");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "enumerate specs, estimate limits, match constants");
  scan_cmd->fallthrough();
  gcf::scan_config sc;
  std::string scan_out = "scan.jsonl", scan_config_file, scan_constants;
  bool scan_resume = false;
  scan_cmd->add_option("--max-degree", sc.max_degree, "degree cap (<= 2)");
  scan_cmd->add_option("--coeff-bound", sc.coeff_bound, "coefficient bound");
  scan_cmd->add_option("--scan-precision", sc.precision, "trusted digits (>= 25)");
  scan_cmd->add_option("--moebius-bound", sc.moebius_bound, "match coefficient bound");
  scan_cmd->add_option("--scan-max-terms", sc.max_terms, "exact stage depth budget");
  scan_cmd->add_option("--threads", sc.threads, "worker threads (0 = auto)");
  scan_cmd->add_option("--constants", scan_constants, "comma list of library constants");
  scan_cmd->add_option("--out", scan_out, "output JSONL path")->capture_default_str();
  scan_cmd->add_option("--config", scan_config_file, "JSON config file mirroring the scan options");
  scan_cmd->add_flag("--resume", scan_resume, "resume from the marker file");

  // transform
  auto* tr_cmd = app.add_subcommand("transform", "equivalence scaling and Euler-form reduction");
  tr_cmd->fallthrough();
  std::string ta_expr, tb_expr, tc_expr;
  bool t_euler = false;
  tr_cmd->add_option("--a", ta_expr, "a(n) polynomial expression")->required();
  tr_cmd->add_option("--b", tb_expr, "b(n) polynomial expression")->required();
  tr_cmd->add_option("--c", tc_expr, "scaling sequence c(n) with c(0) = 1");
  tr_cmd->add_flag("--euler", t_euler, "attempt the Euler-form reduction");

  // report
  auto* rep_cmd = app.add_subcommand("report", "markdown verification report for a family");
  rep_cmd->fallthrough();
  int rep_id = 0;
  long rep_k = 0;
  std::string rep2_a, rep2_b, rep_out;
  rep_cmd->add_option("id", rep_id, "family id: 1, 2, or 3")->required()->check(CLI::Range(1, 3));
  rep_cmd->add_option("--a", rep2_a, "family 1/2 parameter a");
  rep_cmd->add_option("--b", rep2_b, "family 2 parameter b");
  rep_cmd->add_option("--k", rep_k, "family 1/3 parameter k");
  rep_cmd->add_option("--out", rep_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitArgs;
  }


  try {
    if (eval_cmd->parsed()) {
      if (!simple_list.empty()) return run_eval_value(parse_simple(simple_list), g);
      if (!pairs_list.empty()) return run_eval_value(parse_pairs(pairs_list), g);
      if (!a_expr.empty() && !b_expr.empty() && depth_K >= 1) {
        gcf::cf_spec spec{gcf::poly_seq::parse(a_expr), gcf::poly_seq::parse(b_expr)};
        return run_eval_value(gcf::instantiate(spec, depth_K), g);
      }
      std::cerr << "eval: provide --simple, --pairs, or --a/--b with -K\n";
      return kExitArgs;
    }

    if (conv_cmd->parsed()) {
      gcf::cf_spec spec;
      if (!cspec_json.empty()) {
        spec = gcf::cf_spec::from_json(cspec_json);
      } else if (!ca_expr.empty() && !cb_expr.empty()) {
        spec = gcf::cf_spec{gcf::poly_seq::parse(ca_expr), gcf::poly_seq::parse(cb_expr)};
      } else {
        std::cerr << "convergents: provide --a/--b or --spec-json\n";
        return kExitArgs;
      }
      emit_convergent_rows(spec, conv_K, g, std::cout);
      return 0;
    }

    if (fam_cmd->parsed()) {
      gcf::report_request req;
      req.precision = g.precision;
      if (fam_id == 1) {
        if (fam2_a.empty()) { std::cerr << "family 1: --a required\n"; return kExitArgs; }
        req.f1 = {std::stol(fam2_a), fam_k};
      } else if (fam_id == 2) {
        if (fam2_a.empty() || fam2_b.empty()) {
          std::cerr << "family 2: --a and --b required\n";
          return kExitArgs;
        }
        req.f2 = {gcf::rational::from_string(fam2_a), gcf::rational::from_string(fam2_b)};
      } else {
        req.f3 = {fam_k};
      }
      gcf::closed_form_value cf = family_closed_form(fam_id, req);
      gcf::cf_spec spec = family_spec_of(fam_id, req);
      gcf::limit_estimate est =
          gcf::estimate_limit(spec, std::min(g.precision, 30), std::min(g.max_terms, 32768L));
      gcf::big_float diff = abs(est.value - cf.value.rounded_to(est.value.digits()));
      long resid_exp = diff.is_zero() ? -(est.value.digits() - 2) : diff.exponent10();
      bool ok = est.achieved_digits >= 6 && resid_exp <= -6;
      if (g.format == "json") {
        nlohmann::json j = nlohmann::json::parse(cf.to_json());
        j["cross_check"] = {{"classification", gcf::to_string(est.cls)},
                            {"achieved_digits", est.achieved_digits},
                            {"residual_exp", resid_exp},
                            {"ok", ok}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "closed form: " << cf.expr << "\n";
        std::cout << "value: " << cf.value.to_string(g.precision) << "\n";
        std::cout << "cross-check: " << gcf::to_string(est.cls) << ", residual exponent "
                  << resid_exp << (ok ? " (ok)" : " (FAILED)") << "\n";
      }
      return ok ? 0 : kExitVerify;
    }

    if (ver_cmd->parsed()) {
      gcf::cf_spec spec{gcf::poly_seq::parse(va_expr), gcf::poly_seq::parse(vb_expr)};
      gcf::limit_estimate est = gcf::estimate_limit(spec, g.precision, g.max_terms);
      nlohmann::json j{{"classification", gcf::to_string(est.cls)},
                       {"terms_used", est.terms_used},
                       {"achieved_digits", est.achieved_digits},
                       {"zero_q_count", est.zero_q_count}};
      if (est.cls == gcf::convergence_class::geometric ||
          est.cls == gcf::convergence_class::polynomial) {
        j["value"] = est.value.to_string(std::min(g.precision, est.achieved_digits + 1));
        if (est.cls == gcf::convergence_class::polynomial) j["order"] = est.poly_order;
        if (est.achieved_digits >= 25) {
          gcf::scan_config mc;
          mc.moebius_bound = vmoebius;
          if (!vconstants.empty()) {
            mc.constants.clear();
            std::stringstream ss(vconstants);
            std::string item;
            while (std::getline(ss, item, ',')) {
              if (!item.empty()) mc.constants.push_back(item);
            }
          }
          auto ms = gcf::match_constant(est.value, est.achieved_digits, mc);
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& m : ms) {
            arr.push_back({{"constant", m.constant},
                           {"mobius", m.mobius},
                           {"residual_exp", m.residual_exp}});
          }
          j["matches"] = arr;
        }
      }
      if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "classification: " << j["classification"].get<std::string>() << " (terms "
                  << est.terms_used << ", digits " << est.achieved_digits << ")\n";
        if (j.contains("value")) std::cout << "limit: " << j["value"].get<std::string>() << "\n";
        if (j.contains("matches")) {
          for (const auto& m : j["matches"]) {
            std::cout << "match: (" << m["mobius"][0] << " + " << m["mobius"][1] << "*C) / ("
                      << m["mobius"][2] << " + " << m["mobius"][3] << "*C),  C = "
                      << m["constant"].get<std::string>() << ",  residual ~ 1e"
                      << m["residual_exp"] << "\n";
          }
          if (j["matches"].empty()) std::cout << "no matches within bounds\n";
        }
      }
      return 0;
    }

    if (scan_cmd->parsed()) {
      if (!scan_config_file.empty()) {
        std::ifstream cfgf(scan_config_file);
        if (!cfgf) { std::cerr << "scan: cannot read config file\n"; return kExitArgs; }
        nlohmann::json j = nlohmann::json::parse(cfgf);
        if (j.contains("max_degree")) sc.max_degree = j["max_degree"];
        if (j.contains("coeff_bound")) sc.coeff_bound = j["coeff_bound"];
        if (j.contains("precision")) sc.precision = j["precision"];
        if (j.contains("moebius_bound")) sc.moebius_bound = j["moebius_bound"];
        if (j.contains("max_terms")) sc.max_terms = j["max_terms"];
        if (j.contains("constants")) sc.constants = j["constants"].get<std::vector<std::string>>();
        if (j.contains("threads")) sc.threads = j["threads"];
      }
      if (!scan_constants.empty()) {
        sc.constants.clear();
        std::stringstream ss(scan_constants);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) sc.constants.push_back(item);
        }
      }
      gcf::scan_summary s = gcf::scan(sc, scan_out, scan_resume);
      std::cout << "candidates: " << s.candidates << "\nconverged: " << s.converged
                << "\nmatched: " << s.matched << "\nrecords: " << s.records
                << "\nspurious: " << s.spurious << "\n";
      return 0;
    }

    if (tr_cmd->parsed()) {
      gcf::cf_spec spec{gcf::poly_seq::parse(ta_expr), gcf::poly_seq::parse(tb_expr)};
      if (!tc_expr.empty()) {
        gcf::cf_spec scaled = gcf::scale_equivalence(spec, gcf::poly_seq::parse(tc_expr));
        if (g.format == "json") {
          std::cout << scaled.to_json() << "\n";
        } else {
          std::cout << scaled.to_string() << "\n";
        }
        return 0;
      }
      if (t_euler) {
        auto r = gcf::to_euler_form(spec);
        if (!r) {
          std::cout << "not in Euler form (a(n) - 1 + b(n-1) is not identically zero)\n";
          return 0;
        }
        gcf::limit_estimate ev = gcf::euler_value(*r, g.precision, g.max_terms);
        std::cout << "r(n) = " << r->to_string() << "\n";
        if (ev.cls == gcf::convergence_class::geometric) {
          std::cout << "value = " << ev.value.to_string(std::min(g.precision, ev.achieved_digits + 1))
                    << "  (series, " << ev.terms_used << " terms)\n";
        } else {
          std::cout << "series " << gcf::to_string(ev.cls) << ": " << ev.note << "\n";
        }
        return 0;
      }
      std::cerr << "transform: provide --c or --euler\n";
      return kExitArgs;
    }

    if (rep_cmd->parsed()) {
      gcf::report_request req;
      req.family = rep_id;
      req.precision = g.precision;
      if (rep_id == 1) {
        if (rep2_a.empty()) { std::cerr << "report 1: --a required\n"; return kExitArgs; }
        req.f1 = {std::stol(rep2_a), rep_k};
      } else if (rep_id == 2) {
        if (rep2_a.empty() || rep2_b.empty()) {
          std::cerr << "report 2: --a and --b required\n";
          return kExitArgs;
        }
        req.f2 = {gcf::rational::from_string(rep2_a), gcf::rational::from_string(rep2_b)};
      } else {
        req.f3 = {rep_k};
      }
      std::string md = gcf::build_report(req);
      if (rep_out.empty()) {
        std::cout << md;
      } else {
        std::ofstream f(rep_out, std::ios::trunc);
        if (!f) { std::cerr << "report: cannot write " << rep_out << "\n"; return kExitEval; }
        f << md;
      }
      return 0;
    }
  } catch (const gcf::zero_tail_denominator& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitEval;
  } catch (const gcf::denominator_vanishes& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitEval;
  } catch (const gcf::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
  return kExitArgs;
}
