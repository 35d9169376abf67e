#include "ghlab/equilateral.hpp"

#include "ghlab/optimize.hpp"

#include <cassert>
#include <cmath>

namespace ghlab {
namespace {

struct Extremes {
  double min = std::numeric_limits<double>::infinity();
  double max = 0.0;
};

Extremes pairwise_extremes(const NormedModel& model, const Matrix& pts) {
  Extremes e;
  for (Index i = 0; i < pts.cols(); ++i)
    for (Index j = i + 1; j < pts.cols(); ++j) {
      const double d = model.distance(pts.col(i), pts.col(j));
      e.min = std::min(e.min, d);
      e.max = std::max(e.max, d);
    }
  return e;
}

}  // namespace

EquilateralReport is_equilateral(const PointConfig& config, double tol) {
  if (config.size() < 2) throw InputError("equilateral check needs at least two points");
  const Extremes e = pairwise_extremes(config.model(), config.points());
  if (e.min <= kCoincidenceTolerance) throw InputError("configuration has coincident points");
  const double spread = e.max - e.min;
  return EquilateralReport{config, e.max, spread, spread <= tol * e.max};
}

EquilateralReport equilateral_search(const NormedModel& model, Index m, const SearchBudget& budget,
                                     std::uint64_t seed, double tol) {
  if (m < 2) throw InputError("equilateral search needs m >= 2");
  budget.validate();
  const Index dim = model.dim();

  auto to_points = [dim, m](const Vector& x) { return Eigen::Map<const Matrix>(x.data(), dim, m); };
  const Objective objective = [&](const Vector& x) {
    const Extremes e = pairwise_extremes(model, to_points(x));
    if (!(e.max > 0.0) || e.min <= 1e-12 * e.max) return kInfeasible;
    const double ratio = e.min / e.max;
    double value = 1.0 - ratio;
    if (ratio < 0.5) value += 1e3 * (0.5 - ratio);
    return value;
  };
  const Initializer init = [&](std::mt19937_64& rng) {
    Vector x(dim * m);
    for (Index i = 0; i < m; ++i) x.segment(i * dim, dim) = random_in_ball(dim, 1.0, rng);
    return x;
  };

  const MinimizeResult best = multistart_minimize(objective, init, 1.0, budget, seed);
  Matrix pts = to_points(best.x);
  pts = (pts.colwise() - Vector(pts.col(0))).eval();
  const double scale = pairwise_extremes(model, pts).max;
  return is_equilateral(PointConfig(model, pts / scale), tol);
}

Index ed_evidence(const NormedModel& model, const SearchBudget& budget, std::uint64_t seed) {
  const double cap = std::ldexp(1.0, static_cast<int>(std::min<Index>(model.dim(), 62)));
  Index found = 1;
  for (Index m = 2; static_cast<double>(m) <= cap; ++m) {
    if (!equilateral_search(model, m, budget, seed + static_cast<std::uint64_t>(m)).success) break;
    found = m;
  }
  assert(static_cast<double>(found) <= cap);
  return found;
}

}  // namespace ghlab
