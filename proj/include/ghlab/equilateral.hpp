#pragma once

#include "ghlab/normed_model.hpp"

#include <optional>

namespace ghlab {

/// Relative spread below which a configuration is treated as equilateral.
inline constexpr double kEquilateralTolerance = 1e-9;

struct EquilateralReport {
  PointConfig config;
  /// Largest pairwise distance.
  double common_distance = 0.0;
  /// Largest minus smallest pairwise distance.
  double spread = 0.0;
  bool success = false;

  double relative_spread() const { return common_distance > 0 ? spread / common_distance : 0.0; }
};

EquilateralReport is_equilateral(const PointConfig& config, double tol = kEquilateralTolerance);

/// Multistart search for an m-point equilateral set, minimising the relative
/// spread (max - min) / max under the floor min >= max / 2. The returned
/// witness is translated so its first point is the origin and scaled to unit
/// common distance. Deterministic in `seed`.
EquilateralReport equilateral_search(const NormedModel& model, Index m, const SearchBudget& budget,
                                     std::uint64_t seed, double tol = kEquilateralTolerance);

/// Largest m <= 2^dim for which the search succeeds, trying m = 2, 3, ...
/// and stopping at the first failure. A lower bound on the equilateral
/// dimension, never an upper one.
Index ed_evidence(const NormedModel& model, const SearchBudget& budget, std::uint64_t seed);

}  // namespace ghlab
