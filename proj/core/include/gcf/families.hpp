#ifndef GCF_FAMILIES_HPP
#define GCF_FAMILIES_HPP

#include <array>
#include <utility>

#include "gcf/cf.hpp"
#include "gcf/closed_form.hpp"
#include "gcf/limits.hpp"

namespace gcf {

/// Parameters of the linear family [n + k : a n], D = a + k + 1 >= 1.
struct family1_params {
  long a = 0;
  long k = 0;
  long D() const { return a + k + 1; }
};

/// Parameters of the quadratic family [a n^2 + b n + 1 : -a n^2 - b n].
struct family2_params {
  rational a;
  rational b;
};

/// Parameters of the zeta family [(n-1)^k + n^k : -n^(2k)].
struct family3_params {
  long k = 2;
};

cf_spec family1_spec(const family1_params& p);
cf_spec family2_spec(const family2_params& p);
cf_spec family3_spec(const family3_params& p);

/// Closed form of the linear family:
///   a^D / ((D-1)! (e^a - sum_{s<D} a^s/s!)).
/// Rejects a = 0 and D < 1.
closed_form_value family1_limit(const family1_params& p, int precision);

/// The a = -1 special case [n + k + 1 : -n] written through derangement
/// numbers: (-1)^k e / (e k! sum_{s<=k} (-1)^s/s! - k!). Evaluated two ways
/// (literal partial sum, and via the derangement recurrence); both must agree.
closed_form_value family1_derangement_form(long k, int precision);

/// Leading asymptotic coefficients of the numerator and denominator
/// sequences: B_p = (-a)^(D+1) and B_q = (-1)^D a (D-1)! (sum_{s<D} a^s/s! - e^a).
/// Their ratio must reproduce family1_limit; checked internally.
std::pair<rational, closed_form_value> family1_asymptotic_constants(const family1_params& p);

/// Kummer's function M(a, b, z) = sum_k a^(k) / (b^(k) k!) z^k, truncated with
/// a tail bound; `terms` caps the expansion length. Rejects nonpositive
/// integer b.
big_float kummer_M(const rational& a, const rational& b, const rational& z, int precision,
                   long terms = 10000);

/// (M, M', M'') by termwise differentiation of the series.
std::array<big_float, 3> kummer_M_derivs(const rational& a, const rational& b,
                                         const rational& z, int precision, long terms = 10000);

/// Tricomi U(D, D+2, z) via its terminating closed form z^-D (1 + D/z).
big_float tricomi_U_special(long D, const big_float& z);
rational tricomi_U_special_exact(long D, const rational& z);
/// (U, U', U'') from the closed form.
std::array<big_float, 3> tricomi_U_derivs(long D, const big_float& z);

/// F(a, b) = 2 sum_k 1/((k+2)! (3 + b/a)^(k) a^k); requires a > 0 and
/// 3 + b/a > 0.
big_float family2_F(const rational& a, const rational& b, int precision);

/// Closed form (F + 2(2a+b)(a+b+1)) / (F + 2(2a+b)), cross-checked against
/// the convergents of the quadratic family (throws verification_error if the
/// cross-check cannot confirm at least 6 digits).
closed_form_value family2_limit(const family2_params& p, int precision);

/// F at b = a(m - 1/2) through the transformed series
///   2(4+2m)!/(m+2)! sum_k (k+m+2)!/((k+2)! (2k+2m+4)!) (4/a)^k;
/// verified internally against family2_F.
big_float family2_halfint_series(const rational& a, long m, int precision);

/// 1/zeta(k) for k >= 2.
closed_form_value family3_limit(const family3_params& p, int precision);

/// Exact (p(n), q(n)) for the zeta family: p = (n+1)!^k and
/// q = (n+1)!^k sum_{j=1}^{n+1} j^-k.
std::pair<integer, rational> family3_pq_closed(long k, long n);

}  // namespace gcf

#endif
