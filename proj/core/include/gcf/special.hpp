#ifndef GCF_SPECIAL_HPP
#define GCF_SPECIAL_HPP

#include <utility>
#include <vector>

#include "gcf/bigfloat.hpp"
#include "gcf/integer.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// e^x for rational x, correct to `digits` decimal digits. Taylor series with
/// binary splitting; x < 0 goes through the reciprocal of e^|x| to avoid
/// cancellation in the alternating sum.
big_float eval_exp(const rational& x, int digits);

/// e^x for a big_float argument (integer part via the rational path, the
/// fractional remainder by direct Taylor summation).
big_float exp_bf(const big_float& x, int digits);

/// pi via the Machin arctangent formula 16 atan(1/5) - 4 atan(1/239).
big_float eval_pi(int digits);

/// zeta(k) for integer k >= 2, direct series with an Euler-Maclaurin tail.
big_float eval_zeta(long k, int digits);

/// The series sum_{j>=0} (c + j)^(-s) for rational c > 0 and integer s >= 2.
big_float em_sum(long s, const rational& c, int digits);

/// Polygamma by its series definition:
/// psi(k, z) = (-1)^(k+1) k! sum_{j>=0} (z+j)^(-(k+1)),  z > 0, k >= 1.
big_float polygamma_series(long k, const rational& z, int digits);

/// (sinh x, cosh x).
std::pair<big_float, big_float> eval_sinh_cosh(const big_float& x, int digits);

/// Incomplete gamma of positive integer order via the exact finite identity
/// Gamma(m, a) = (m-1)! e^(-a) sum_{s=0}^{m-1} a^s/s!.  Rejects m < 1.
big_float incomplete_gamma_int(long m, const rational& a, int digits);

/// Exact Bernoulli number B_m (B_1 = -1/2 convention).
const rational& bernoulli(unsigned long m);

/// Rising factorial x(x+1)...(x+k-1).
rational rising_factorial(const rational& x, unsigned long k);

}  // namespace gcf

#endif
