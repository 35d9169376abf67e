#include "ghlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace ghlab {

std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(start >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

Vector random_in_ball(Index dim, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = normal(rng);
  const double n = v.norm();
  if (n == 0.0) return Vector::Zero(dim);
  return v * (radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim)) / n);
}

namespace {

Matrix random_orthonormal(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix g(n, n);
  for (Index i = 0; i < g.size(); ++i) g(i) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, n);
}

void anneal(const Objective& f, Vector& x, double& fx, Vector& best, double& fbest, double scale, int steps,
            std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  const Index n = x.size();
  const double t0 = std::max(1e-3, 0.05 * std::min(std::abs(fx), 1e6));
  const double sigma0 = 0.3 * scale;
  for (int s = 0; s < steps; ++s) {
    const double frac = static_cast<double>(s) / std::max(1, steps - 1);
    const double temperature = t0 * std::pow(1e-6, frac);
    const double sigma = sigma0 * std::pow(1e-4, frac);
    Vector y = x;
    // Perturb a single coordinate half the time, all of them otherwise.
    if (unit(rng) < 0.5) {
      y(static_cast<Index>(unit(rng) * static_cast<double>(n)) % n) += sigma * normal(rng);
    } else {
      for (Index i = 0; i < n; ++i) y(i) += sigma * normal(rng);
    }
    const double fy = f(y);
    if (fy <= fx || unit(rng) < std::exp(-(fy - fx) / temperature)) {
      x = std::move(y);
      fx = fy;
      if (fx < fbest) {
        fbest = fx;
        best = x;
      }
    }
  }
}

constexpr int kPolishPasses = 8;

void pattern_search(const Objective& f, Vector& x, double& fx, double scale, int rounds, std::mt19937_64& rng) {
  const Index n = x.size();
  double step = 0.05 * scale;
  Vector last_success = Vector::Zero(n);
  Matrix dirs(n, 2 * n + 1);
  for (int round = 0; round < rounds; ++round) {
    const double floor = 1e-15 * std::max(1.0, x.cwiseAbs().maxCoeff());
    if (step < floor) break;
    dirs.leftCols(n) = Matrix::Identity(n, n);
    dirs.middleCols(n, n) = random_orthonormal(n, rng);
    dirs.col(2 * n) = last_success;
    bool improved = false;
    // Last successful direction first, then the rest with both signs.
    for (Index c = 2 * n; c >= 0 && !improved; --c) {
      if (dirs.col(c).isZero()) continue;
      for (double sign : {1.0, -1.0}) {
        Vector y = x + (sign * step) * dirs.col(c);
        const double fy = f(y);
        if (fy < fx) {
          last_success = sign * dirs.col(c);
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    step = improved ? std::min(2.0 * step, scale) : 0.5 * step;
  }
}

}  // namespace

MinimizeResult local_minimize(const Objective& f, Vector x0, double scale, int iterations, std::mt19937_64& rng) {
  double fx = f(x0);
  if (x0.size() == 0) return {std::move(x0), fx, 0};
  Vector best = x0;
  double fbest = fx;
  anneal(f, x0, fx, best, fbest, scale, iterations, rng);
  pattern_search(f, best, fbest, scale, iterations, rng);
  return {std::move(best), fbest, 0};
}

MinimizeResult multistart_minimize(const Objective& f, const Initializer& init, double scale,
                                   const SearchBudget& budget, std::uint64_t seed,
                                   std::span<const Vector> seed_points) {
  budget.validate();
  const int total = static_cast<int>(seed_points.size()) + budget.starts;
  std::vector<MinimizeResult> results(static_cast<std::size_t>(total));

  auto run_start = [&](int s) {
    auto rng = start_rng(seed, static_cast<std::uint64_t>(s));
    Vector x0 = s < static_cast<int>(seed_points.size()) ? seed_points[static_cast<std::size_t>(s)] : init(rng);
    MinimizeResult r = local_minimize(f, std::move(x0), scale, budget.iterations, rng);
    r.start = s;
    results[static_cast<std::size_t>(s)] = std::move(r);
  };

  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, total);
  if (workers == 1) {
    for (int s = 0; s < total; ++s) run_start(s);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int s = w; s < total; s += workers) run_start(s);
      });
  }

  MinimizeResult best;
  for (auto& r : results)
    if (best.start < 0 || r.value < best.value) best = std::move(r);

  // Polish the winner with restarted pattern searches; a fresh step size
  // often escapes the kinks the first pass stalled on.
  auto rng = start_rng(seed, total);
  for (int pass = 0; pass < kPolishPasses; ++pass) {
    const double before = best.value;
    pattern_search(f, best.x, best.value, scale * std::pow(0.1, pass % 3), budget.iterations, rng);
    if (before - best.value <= 1e-15 * std::max(1.0, std::abs(before)) && pass >= 2) break;
  }
  return best;
}

}  // namespace ghlab
