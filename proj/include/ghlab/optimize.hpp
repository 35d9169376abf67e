#pragma once

#include "ghlab/common.hpp"

#include <functional>
#include <random>
#include <span>

namespace ghlab {

/// Objective value assigned to degenerate or otherwise unusable points.
inline constexpr double kInfeasible = 1e300;

using Objective = std::function<double(const Vector&)>;
using Initializer = std::function<Vector(std::mt19937_64&)>;

struct MinimizeResult {
  Vector x;
  double value = kInfeasible;
  /// Index of the winning start; seed points come first.
  int start = -1;
};

/// Independent RNG stream for one start of a multistart run.
std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t start);

/// Derivative-free local search from `x0`: an annealing phase with Gaussian
/// proposals followed by a directional pattern search whose poll set mixes
/// coordinate directions with a fresh random orthonormal basis each round.
/// Steps double on success and halve on failure.
MinimizeResult local_minimize(const Objective& f, Vector x0, double scale, int iterations,
                              std::mt19937_64& rng);

/// Runs every seed point and then `budget.starts` random starts. The best
/// value wins; ties go to the lower start index, so the result does not depend
/// on how starts are scheduled across threads.
MinimizeResult multistart_minimize(const Objective& f, const Initializer& init, double scale,
                                   const SearchBudget& budget, std::uint64_t seed,
                                   std::span<const Vector> seed_points = {});

/// Uniform sample from the Euclidean ball of `radius` in R^dim.
Vector random_in_ball(Index dim, double radius, std::mt19937_64& rng);

}  // namespace ghlab
