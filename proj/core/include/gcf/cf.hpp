#ifndef GCF_CF_HPP
#define GCF_CF_HPP

#include <string>
#include <utility>
#include <vector>

#include "gcf/polyseq.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// A general continued fraction [a(n) : b(n)] given by two term sequences,
/// both evaluable at every integer n >= 1.
struct cf_spec {
  poly_seq a;
  poly_seq b;

  std::string to_string() const { return "[" + a.to_string() + " : " + b.to_string() + "]"; }

  /// JSON round-trip: {"a": ["c0", ...], "b": [...], "a_den": ..., "b_den": ...}
  /// with coefficients as exact "num/den" strings in ascending degree order.
  std::string to_json() const;
  static cf_spec from_json(const std::string& text);
};

/// Exact numerator/denominator pair at index m: p(m)/q(m) is the depth-(m+1)
/// convergent whenever q(m) != 0.
struct convergent_pair {
  long index;
  rational p;
  rational q;
};

/// Exact value of the finite continued fraction described by the given
/// (a, b) pairs, evaluated bottom-up; the last pair's b is unused.
/// Throws zero_tail_denominator if an intermediate tail is zero.
rational eval_finite(const std::vector<std::pair<rational, rational>>& pairs);

/// [(a(1), b(1)), ..., (a(K), b(K))] evaluated exactly.
std::vector<std::pair<rational, rational>> instantiate(const cf_spec& spec, long K);

/// Exact (p(m), q(m)) for m = 0..M from the three-term recurrences
///   x(n+2) = a(n+3) x(n+1) + b(n+2) x(n)
/// with p(0) = a(1), p(1) = a(1)a(2) + b(1), q(0) = 1, q(1) = a(2).
std::vector<convergent_pair> pq_convergents(const cf_spec& spec, long M);

}  // namespace gcf

#endif
