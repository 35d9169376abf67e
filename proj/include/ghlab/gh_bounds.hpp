#pragma once

#include "ghlab/equilateral.hpp"
#include "ghlab/imbalance.hpp"

#include <vector>

namespace ghlab {

/// An equilateral m-set (m >= 3) of common distance d > 0 in some metric space.
struct EquilateralSpec {
  Index m = 3;
  double d = 1.0;

  void validate() const;
};

struct BoundReport {
  double bound = 0.0;
  /// True only when the imbalance input bounds c_m from below.
  bool valid = false;
  EquilateralSpec spec;
  double c = 0.0;
  CertTag c_tag = CertTag::upper;
  /// Scaling applied to the witness diameter; 1 outside sweeps.
  double lambda = 1.0;
};

/// Lower bound (1/2) min{d/2, d c / (2 + c)} on the GH distance between a
/// space holding the equilateral set and a normed space with imbalance c.
BoundReport equilateral_gap_bound(const EquilateralSpec& spec, const CertifiedValue& c);

struct EmbeddingResult {
  PointConfig placement;
  /// Largest | d_X(i, j) - ||p_i - p_j|| |; an upper bound on the best achievable.
  double distortion;
};

EmbeddingResult min_distortion_embedding(const FiniteMetricSpace& x, const NormedModel& model,
                                         const SearchBudget& budget, std::uint64_t seed);

struct SweepReport {
  bool equilateral_found = false;
  std::optional<EquilateralReport> equilateral;
  CertifiedValue c;
  std::vector<BoundReport> rows;
  std::string diagnostic;
};

/// Scales an equilateral witness of `x_model` by each lambda and bounds its GH
/// distance to `y_model`. The bounds grow linearly in lambda whenever the
/// imbalance certificate for `y_model` is valid.
SweepReport infinite_distance_sweep(const NormedModel& x_model, const NormedModel& y_model, Index m,
                                    std::span<const double> lambdas, const SearchBudget& budget,
                                    std::uint64_t seed);

/// Same, with a caller-supplied imbalance certificate for `y_model`.
SweepReport infinite_distance_sweep(const NormedModel& x_model, const CertifiedValue& c, Index m,
                                    std::span<const double> lambdas, const SearchBudget& budget,
                                    std::uint64_t seed);

}  // namespace ghlab
