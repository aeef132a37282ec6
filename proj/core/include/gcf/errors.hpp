#ifndef GCF_ERRORS_HPP
#define GCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcf {

/// A tail of a finite continued fraction evaluated to zero where a
/// division was required. `depth` is the 1-based depth of the offending term.
struct zero_tail_denominator : std::runtime_error {
  explicit zero_tail_denominator(long depth_)
      : std::runtime_error("zero tail denominator at depth " + std::to_string(depth_)),
        depth(depth_) {}
  long depth;
};

/// A sequence denominator polynomial vanished at an evaluation point.
struct denominator_vanishes : std::runtime_error {
  explicit denominator_vanishes(long n_)
      : std::runtime_error("sequence denominator vanishes at n = " + std::to_string(n_)), n(n_) {}
  long n;
};

/// A closed form failed its internal cross-check against the convergents.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gcf

#endif
