#ifndef GCF_TRANSFORM_HPP
#define GCF_TRANSFORM_HPP

#include <optional>

#include "gcf/cf.hpp"
#include "gcf/limits.hpp"

namespace gcf {

/// Equivalence transformation [a(n) : b(n)] -> [c(n-1) a(n) : c(n-1) c(n) b(n)]
/// for a sequence c with c(0) = 1; every convergent is unchanged.
/// Rejects c with c(0) != 1.
cf_spec scale_equivalence(const cf_spec& spec, const poly_seq& c);

/// If a(n) - 1 + b(n-1) is identically zero (as a rational function), the
/// fraction is in Euler form [r(n-1) + 1 : -r(n)]; returns r = -b.
/// Otherwise returns nullopt.
std::optional<poly_seq> to_euler_form(const cf_spec& spec);

/// Value of the Euler-form fraction via the series identity
///   [r(n-1) + 1 : -r(n)] = r(0) + 1 / sum_{k>=0} prod_{j=1}^{k} r(j),
/// with numeric divergence detection on the partial products.
limit_estimate euler_value(const poly_seq& r, int precision, long max_terms = 100000);

}  // namespace gcf

#endif
