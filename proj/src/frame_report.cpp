#include "framecraft/frame_report.hpp"

#include <algorithm>
#include <cmath>

namespace framecraft {

bool tight_within(const Bounds& b, double tol_tight) {
  return b.second - b.first <= tol_tight * std::abs(b.second);
}

FrameReport report_from_spectra(std::vector<std::vector<double>> per_pi_eigenvalues, int span_dim,
                                int group_order, const Tolerances& tol) {
  FrameReport r;
  r.span_dim = span_dim;
  r.group_order = group_order;
  r.tolerance = tol.rank;
  double top = 0;
  for (auto& eigs : per_pi_eigenvalues) {
    std::sort(eigs.begin(), eigs.end());
    for (double v : eigs) top = std::max(top, v);
  }
  r.per_pi_eigenvalues = std::move(per_pi_eigenvalues);
  const double cutoff = tol.rank * top;
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto& eigs : r.per_pi_eigenvalues)
    for (double v : eigs)
      if (v > cutoff && top > 0) {
        lo = any ? std::min(lo, v) : v;
        hi = any ? std::max(hi, v) : v;
        any = true;
      }
  r.is_frame = true;
  if (!any) return r;
  r.continuous_bounds = Bounds{lo, hi};
  r.discrete_bounds = Bounds{lo * group_order, hi * group_order};
  r.is_tight = tight_within(*r.continuous_bounds, tol.tight);
  r.is_parseval_continuous = std::abs(lo - 1) <= tol.tight && std::abs(hi - 1) <= tol.tight;
  return r;
}

}  // namespace framecraft
