#ifndef GCF_REPORT_HPP
#define GCF_REPORT_HPP

#include <string>

#include "gcf/families.hpp"

namespace gcf {

/// Which family a verification report is about, plus its parameters.
struct report_request {
  int family = 1;  // 1, 2, or 3
  family1_params f1;
  family2_params f2;
  family3_params f3;
  int precision = 50;
};

/// Renders a deterministic markdown verification report: the spec, the first
/// eight exact convergents, the closed form, a residual table at
/// m in {50, 100, 200}, and the invariant checklist results.
std::string build_report(const report_request& req);

}  // namespace gcf

#endif
