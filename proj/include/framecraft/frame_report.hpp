#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "framecraft/tolerances.hpp"

namespace framecraft {

using Bounds = std::pair<double, double>;

/// Frame analysis of an orbit on the subspace it spans. "Continuous" bounds
/// use the averaged sum over K; "discrete" bounds are |K| times those.
struct FrameReport {
  int span_dim = 0;
  /// Frame for its own span. Always true for finite families; kept explicit.
  bool is_frame = true;
  /// Set by analyses that know the ambient space.
  std::optional<bool> is_frame_for_whole_space;
  bool is_tight = false;
  bool is_parseval_continuous = false;
  std::optional<Bounds> continuous_bounds;
  std::optional<Bounds> discrete_bounds;
  /// Per irrep (table order), sorted ascending, continuous normalization.
  std::vector<std::vector<double>> per_pi_eigenvalues;
  double tolerance = 0;
  int group_order = 1;
};

/// Builds a report from per-irrep spectra. Eigenvalues at or below
/// tol.rank times the global maximum count as zero.
FrameReport report_from_spectra(std::vector<std::vector<double>> per_pi_eigenvalues,
                                int span_dim, int group_order, const Tolerances& tol);

bool tight_within(const Bounds& b, double tol_tight);

}  // namespace framecraft
