#pragma once

#include "ghlab/common.hpp"
#include "ghlab/metric_space.hpp"

#include <memory>
#include <string>
#include <variant>

namespace ghlab {

/// l_p norm on R^dim. `p` is ignored when `infinite` is set.
struct LpNorm {
  double p = 2.0;
  bool infinite = false;
};

/// norm(x) = max_a |<a, x>| over the rows of `functionals`.
struct PolyhedralNorm {
  Matrix functionals;
};

class NormedModel;

/// V^m with ||(v_1, ..., v_m)|| = max_q ||v_q||.
struct ProductMaxNorm {
  std::shared_ptr<const NormedModel> factor;
  Index copies = 1;
};

/// A finite-dimensional real normed space that can be evaluated at any vector.
class NormedModel {
 public:
  using Kind = std::variant<LpNorm, PolyhedralNorm, ProductMaxNorm>;

  static NormedModel lp(Index dim, double p);
  static NormedModel lp_inf(Index dim);
  static NormedModel polyhedral(Matrix functionals);
  /// The real line; every one-dimensional normed space is isometric to it.
  static NormedModel line() { return lp(1, 2.0); }

  Index dim() const { return dim_; }
  const Kind& kind() const { return kind_; }

  double norm(const Eigen::Ref<const Vector>& v) const;
  double distance(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v) const;

  bool is_lp_inf() const;
  std::string describe() const;

 private:
  NormedModel(Index dim, Kind kind) : dim_(dim), kind_(std::move(kind)) {}
  double norm_unchecked(const Eigen::Ref<const Vector>& v) const;

  friend NormedModel product_max_norm(const NormedModel& model, Index m);

  Index dim_;
  Kind kind_;
};

/// An ordered list of m >= 1 vectors of a model, stored as the columns of `points`.
class PointConfig {
 public:
  PointConfig(NormedModel model, Matrix points);

  const NormedModel& model() const { return model_; }
  const Matrix& points() const { return points_; }
  Index size() const { return points_.cols(); }
  auto point(Index i) const { return points_.col(i); }

  double distance(Index i, Index j) const { return model_.distance(points_.col(i), points_.col(j)); }
  double min_pairwise_distance() const;
  double max_pairwise_distance() const;
  double max_norm() const;

  PointConfig scaled(double lambda) const { return PointConfig(model_, lambda * points_); }
  PointConfig translated(const Eigen::Ref<const Vector>& shift) const;

 private:
  NormedModel model_;
  Matrix points_;
};

/// Free-function forms of the model operations.
double norm_eval(const NormedModel& model, const Eigen::Ref<const Vector>& v);
double distance(const NormedModel& model, const Eigen::Ref<const Vector>& u,
                const Eigen::Ref<const Vector>& v);

/// Minimum pairwise distance below which two points count as coincident.
inline constexpr double kCoincidenceTolerance = 1e-12;

/// Pairwise model distances of a configuration of distinct points.
FiniteMetricSpace sample_subspace(const PointConfig& config);

NormedModel product_max_norm(const NormedModel& model, Index m);

}  // namespace ghlab
