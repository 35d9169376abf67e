#pragma once

#include "ghlab/metric_space.hpp"

#include <cstdint>

namespace ghlab {

struct GHResult {
  double distance = 0.0;
  Correspondence optimal;
  std::uint64_t nodes_explored = 0;
  /// False when the node budget ran out; `distance` is then only an upper bound.
  bool exact = true;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Exact Gromov-Hausdorff distance between finite spaces: half the minimum
/// distortion over all correspondences.
///
/// Only correspondences of the form graph(f) u graph(g)^T are enumerated,
/// since every correspondence contains one and distortion is monotone under
/// inclusion. Branch and bound prunes partial assignments whose running
/// distortion already exceeds the incumbent. Among optimal correspondences the
/// lexicographically smallest pair list is returned.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ghlab
