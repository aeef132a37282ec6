#ifndef GCF_TEST_UTIL_HPP
#define GCF_TEST_UTIL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "gcf/bigfloat.hpp"
#include "gcf/cf.hpp"
#include "gcf/polyseq.hpp"

namespace gcf_test {

inline gcf::big_float bf(const std::string& s, int digits) {
  return gcf::big_float::from_string(s, digits);
}

/// |a - b| < 10^-tol_exp
inline bool close_abs(const gcf::big_float& a, const gcf::big_float& b, int tol_exp) {
  return abs(a - b) < gcf::big_float::pow10(-tol_exp, std::max(a.digits(), b.digits()));
}

/// mpfr's own transcendental functions, used only as independent oracles
inline gcf::big_float mpfr_oracle_exp(const gcf::big_float& x, int digits) {
  gcf::big_float r(digits);
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline gcf::big_float mpfr_oracle_zeta(unsigned long k, int digits) {
  gcf::big_float r(digits);
  mpfr_zeta_ui(r.raw(), k, MPFR_RNDN);
  return r;
}

inline gcf::big_float mpfr_oracle_sinh(const gcf::big_float& x, int digits) {
  gcf::big_float r(digits);
  mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline gcf::big_float mpfr_oracle_cosh(const gcf::big_float& x, int digits) {
  gcf::big_float r(digits);
  mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline gcf::cf_spec spec_of(const std::string& a, const std::string& b) {
  return gcf::cf_spec{gcf::poly_seq::parse(a), gcf::poly_seq::parse(b)};
}

/// specs exercising every convergence behavior; the workhorse fixture
inline std::vector<gcf::cf_spec> spec_zoo() {
  return {
      spec_of("1", "1"),                           // golden ratio
      spec_of("4*n-2", "1"),                       // (e+1)/(e-1)
      spec_of("n+3", "-n"),                        // e/(e-2)
      spec_of("n+2", "-n"),                        // e
      spec_of("3*n", "-n*(2*n-1)"),                // 4/(3 pi - 8)
      spec_of("4*n^2+6*n+1", "-4*n^2-6*n"),        // 3/(3-e)
      spec_of("(n-1)^3+n^3", "-n^6"),              // 1/zeta(3)
      spec_of("(n-1)^2+n^2", "-n^4"),              // 1/zeta(2)
      spec_of("2", "1"),                           // 1 + sqrt(2)
      spec_of("3/2", "-1/2"),                      // rational coefficients, limit 1
  };
}

// frozen reference digits (independently computed and cross-checked against
// the series/quadrature oracles in the tests below)
inline const char* kE65 = "2.7182818284590452353602874713526624977572470936999595749669676277";
inline const char* kPi65 = "3.1415926535897932384626433832795028841971693993751058209749445923";
inline const char* kZeta3_40 = "1.202056903159594285399738161511449990765";
inline const char* kInvZeta3_40 = "0.8319073725807074686831262788215307344171";
inline const char* kEOverEm2_40 = "3.784422382354665628753105756959633056748";
inline const char* k3Over3mE_45 = "10.6489403349115346466791780543930868014592759";
inline const char* kEulerRatio80 =
    "2.1639534137386528487700040102180231170937386021507922725335741192960876347833395";
inline const char* kGolden40 = "1.618033988749894848204586834365638117720";
inline const char* kGamma42_30 = "5.14274076299128229197198080895";
inline const char* kFam2_69_40 = "15.64692550726063532101132770967793023276";
inline const char* kF46_40 = "1.018730584011550140239966935627128654481";

}  // namespace gcf_test

#endif
