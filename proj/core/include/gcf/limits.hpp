#ifndef GCF_LIMITS_HPP
#define GCF_LIMITS_HPP

#include <string>
#include <vector>

#include "gcf/bigfloat.hpp"
#include "gcf/cf.hpp"

namespace gcf {

enum class convergence_class { geometric, polynomial, undetermined, divergent, undefined };

std::string to_string(convergence_class c);

/// Numeric estimate of lim p(m)/q(m) with an honest accuracy accounting.
///
/// `achieved_digits` counts correct digits after the decimal point, derived
/// from the final residual (tail bound for geometric sequences, last
/// extrapolation correction for polynomial ones).
struct limit_estimate {
  big_float value;
  int achieved_digits = 0;
  long terms_used = 0;
  convergence_class cls = convergence_class::undetermined;
  int poly_order = 0;  // meaningful when cls == polynomial
  long zero_q_count = 0;
  std::string note;
};

/// Estimates the limit by monitoring exact convergents at a power-of-two
/// ladder of depths. Classifies the convergence empirically:
///  - geometric: successive-difference ratio bounded below 1 (includes
///    faster-than-geometric decay);
///  - polynomial(r): ladder error ratios e(2m)/e(m) stabilize at 2^-r;
///    Richardson extrapolation in 1/m is then applied;
///  - divergent: unbounded growth or oscillation without contraction;
///  - undefined: more than `gap_threshold` vanishing q(m);
///  - undetermined: none of the above could be established.
limit_estimate estimate_limit(const cf_spec& spec, int precision, long max_terms,
                              long gap_threshold = 8);

/// One Richardson extrapolation pass over values g[j] at depths m0/2^j
/// (g[0] is the largest depth) assuming error = sum_{i>=r} c_i m^-i.
/// Returns the extrapolated value and the magnitude of the last correction.
std::pair<big_float, big_float> richardson_ladder(const std::vector<big_float>& g, int r);

}  // namespace gcf

#endif
