#ifndef GCF_INTEGER_HPP
#define GCF_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcf {

/// Arbitrary-precision signed integer. Exact; never overflows.
using integer = mpz_class;

inline integer factorial(unsigned long n) {
  integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline integer binomial(unsigned long n, unsigned long k) {
  integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline integer pow_int(const integer& base, unsigned long e) {
  integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Derangement numbers: D(0) = 1, D(k) = k*D(k-1) + (-1)^k.
inline integer derangement(unsigned long k) {
  integer d = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    d = integer(i) * d + ((i % 2 == 0) ? 1 : -1);
  }
  return d;
}

}  // namespace gcf

#endif
