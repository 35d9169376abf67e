#include "ghlab/gh_bounds.hpp"

#include "ghlab/optimize.hpp"

#include <cmath>

namespace ghlab {

void EquilateralSpec::validate() const {
  if (m < 3) throw InputError("equilateral set needs m >= 3");
  if (!(d > 0.0) || !std::isfinite(d)) throw InputError("equilateral diameter must be positive");
}

BoundReport equilateral_gap_bound(const EquilateralSpec& spec, const CertifiedValue& c) {
  spec.validate();
  if (!(c.value >= 0.0)) throw InputError("metric imbalance must be non-negative");
  const double d = spec.d;
  const double from_imbalance = std::isinf(c.value) ? d : d * c.value / (2.0 + c.value);
  const double bound = 0.5 * std::min(d / 2.0, from_imbalance);
  return BoundReport{bound, c.bounds_from_below(), spec, c.value, c.tag, 1.0};
}

EmbeddingResult min_distortion_embedding(const FiniteMetricSpace& x, const NormedModel& model,
                                         const SearchBudget& budget, std::uint64_t seed) {
  budget.validate();
  const Index n = x.size();
  const Index dim = model.dim();
  if (n == 1) return {PointConfig(model, Matrix::Zero(dim, 1)), 0.0};

  // The first point is pinned at the origin; distortion is translation invariant.
  auto to_points = [dim, n](const Vector& v) {
    Matrix pts = Matrix::Zero(dim, n);
    pts.rightCols(n - 1) = Eigen::Map<const Matrix>(v.data(), dim, n - 1);
    return pts;
  };
  auto distortion_of = [&](const Matrix& pts) {
    double worst = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        worst = std::max(worst, std::abs(x(i, j) - model.distance(pts.col(i), pts.col(j))));
    return worst;
  };
  const double diam = x.diameter();
  const Objective objective = [&](const Vector& v) { return distortion_of(to_points(v)); };
  const Initializer init = [&](std::mt19937_64& rng) {
    Vector v((n - 1) * dim);
    for (Index i = 0; i + 1 < n; ++i) v.segment(i * dim, dim) = random_in_ball(dim, diam, rng);
    return v;
  };

  const MinimizeResult best = multistart_minimize(objective, init, diam, budget, seed);
  Matrix pts = to_points(best.x);
  const double value = distortion_of(pts);
  return {PointConfig(model, std::move(pts)), value};
}

SweepReport infinite_distance_sweep(const NormedModel& x_model, const NormedModel& y_model, Index m,
                                    std::span<const double> lambdas, const SearchBudget& budget,
                                    std::uint64_t seed) {
  if (m < 3) throw InputError("sweep needs m >= 3");
  return infinite_distance_sweep(x_model, c_m_upper(y_model, m, budget, seed + 1), m, lambdas, budget, seed);
}

SweepReport infinite_distance_sweep(const NormedModel& x_model, const CertifiedValue& c, Index m,
                                    std::span<const double> lambdas, const SearchBudget& budget,
                                    std::uint64_t seed) {
  if (m < 3) throw InputError("sweep needs m >= 3");
  for (double lambda : lambdas)
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("sweep scale factors must be positive");

  SweepReport report;
  report.c = c;
  EquilateralReport eq = equilateral_search(x_model, m, budget, seed);
  report.equilateral_found = eq.success;
  report.equilateral = eq;
  if (!eq.success) {
    report.diagnostic = "no equilateral " + std::to_string(m) + "-set found in " + x_model.describe() +
                        " (best relative spread " + std::to_string(eq.relative_spread()) + ")";
    return report;
  }
  if (!c.bounds_from_below())
    report.diagnostic = "imbalance certificate is tagged " + to_string(c.tag) + "; bounds are not sound";

  // The witness is scaled, not searched again: lambda x_1, ..., lambda x_m is
  // equilateral with diameter lambda d.
  const double d = eq.common_distance;
  for (double lambda : lambdas) {
    BoundReport row = equilateral_gap_bound(EquilateralSpec{m, lambda * d}, c);
    row.lambda = lambda;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace ghlab
