#ifndef GCF_SCANNER_HPP
#define GCF_SCANNER_HPP

#include <array>
#include <string>
#include <vector>

#include "gcf/bigfloat.hpp"
#include "gcf/cf.hpp"
#include "gcf/limits.hpp"

namespace gcf {

/// Configuration for candidate enumeration, limit estimation and constant
/// matching.
struct scan_config {
  int max_degree = 2;        // degree cap for a(n), b(n); at most 2
  long coeff_bound = 6;      // |coefficients| <= bound
  int precision = 30;        // trusted digits required of a limit; >= 25
  long moebius_bound = 8;    // |p_i| <= bound in (p1 + p2 C)/(p3 + p4 C)
  long max_terms = 16384;    // depth budget for exact limit estimation
  std::vector<std::string> constants = {"e", "pi", "zeta3", "sqrt2", "golden"};
  unsigned threads = 0;      // 0 = hardware concurrency (capped at 8)
};

/// A recognized limit: |limit - (p1 + p2 C)/(p3 + p4 C)| = residual.
/// Coefficients are gcd-normalized with the denominator positive at C.
/// Pure-rational matches carry constant "rational" (p2 = p4 = 0).
struct match_result {
  std::vector<long> a_coeffs;
  std::vector<long> b_coeffs;
  std::string constant;
  std::array<long, 4> mobius{0, 0, 0, 0};
  std::string limit_str;
  int limit_digits = 0;
  long residual_exp = 0;  // residual < 10^residual_exp
  long terms_used = 0;
};

struct scan_summary {
  long candidates = 0;
  long converged = 0;
  long matched = 0;      // candidates with at least one verified match
  long records = 0;      // JSONL lines written
  long spurious = 0;     // matches dropped by the doubled-precision recheck
};

/// Deterministic enumeration of candidate specs: integer coefficients with
/// |c| <= coeff_bound and degree <= max_degree, b not identically zero,
/// a(n) > 0 for n = 1..5. Index order is the canonical candidate order.
class candidate_enumeration {
 public:
  explicit candidate_enumeration(const scan_config& cfg);
  long size() const { return static_cast<long>(a_list_.size()) * static_cast<long>(b_list_.size()); }
  std::pair<std::vector<long>, std::vector<long>> coeffs(long index) const;
  cf_spec spec(long index) const;

 private:
  std::vector<std::vector<long>> a_list_;
  std::vector<std::vector<long>> b_list_;
};

/// Named constant supplier for the match library ("e", "pi", "zeta<k>",
/// "sqrt2", "golden").
big_float named_constant(const std::string& name, int digits);

/// Exhaustive bounded search for Moebius forms (p1 + p2 C)/(p3 + p4 C) over
/// every library constant, plus pure-rational p1/p3 forms. `trusted_digits`
/// is the absolute accuracy of x; matches require residual
/// < 10^-(trusted_digits - 5) and trusted_digits >= 25.
std::vector<match_result> match_constant(const big_float& x, int trusted_digits,
                                         const scan_config& cfg);

/// Full discovery pass: estimate every candidate's limit, discard
/// divergent/undefined/undetermined ones, match the rest against the
/// constant library, verify matches at doubled precision, and append
/// verified records to `output_path` as JSONL (one object per line, in
/// candidate order, after a one-line header). A plain-text resume marker
/// (last flushed candidate index) is maintained at output_path + ".resume".
scan_summary scan(const scan_config& cfg, const std::string& output_path, bool resume = false);

}  // namespace gcf

#endif
