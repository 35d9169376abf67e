#include "ghlab/normed_model.hpp"

#include <cmath>
#include <sstream>

namespace ghlab {

NormedModel NormedModel::lp(Index dim, double p) {
  if (dim < 1) throw ValidationError("model dimension must be positive");
  if (std::isinf(p) && p > 0) return lp_inf(dim);
  if (!(p >= 1.0)) throw ValidationError("l_p norms need p >= 1");
  return NormedModel(dim, LpNorm{p, false});
}

NormedModel NormedModel::lp_inf(Index dim) {
  if (dim < 1) throw ValidationError("model dimension must be positive");
  return NormedModel(dim, LpNorm{0.0, true});
}

NormedModel NormedModel::polyhedral(Matrix functionals) {
  const Index dim = functionals.cols();
  if (dim < 1 || functionals.rows() < 1) throw ValidationError("polyhedral norm needs at least one functional");
  if (!functionals.allFinite()) throw ValidationError("polyhedral functionals must be finite");
  Eigen::FullPivLU<Matrix> lu(functionals);
  if (lu.rank() < dim) throw ValidationError("polyhedral functionals do not span the space; the norm would not be definite");
  return NormedModel(dim, PolyhedralNorm{std::move(functionals)});
}

NormedModel product_max_norm(const NormedModel& model, Index m) {
  if (m < 1) throw InputError("product needs at least one factor");
  if (m == 1) return model;
  return NormedModel(model.dim() * m, ProductMaxNorm{std::make_shared<const NormedModel>(model), m});
}

double NormedModel::norm_unchecked(const Eigen::Ref<const Vector>& v) const {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LpNorm>) {
          if (k.infinite) return v.cwiseAbs().maxCoeff();
          if (k.p == 1.0) return v.cwiseAbs().sum();
          if (k.p == 2.0) return v.norm();
          const double scale = v.cwiseAbs().maxCoeff();
          if (scale == 0.0) return 0.0;
          return scale * std::pow((v.cwiseAbs() / scale).array().pow(k.p).sum(), 1.0 / k.p);
        } else if constexpr (std::is_same_v<K, PolyhedralNorm>) {
          return (k.functionals * v).cwiseAbs().maxCoeff();
        } else {
          const Index d = k.factor->dim();
          double worst = 0.0;
          for (Index q = 0; q < k.copies; ++q) worst = std::max(worst, k.factor->norm_unchecked(v.segment(q * d, d)));
          return worst;
        }
      },
      kind_);
}

double NormedModel::norm(const Eigen::Ref<const Vector>& v) const {
  if (v.size() != dim_) {
    std::ostringstream os;
    os << "vector has dimension " << v.size() << " but the model has dimension " << dim_;
    throw InputError(os.str());
  }
  return norm_unchecked(v);
}

double NormedModel::distance(const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v) const {
  if (u.size() != v.size()) throw InputError("vectors have different dimensions");
  return norm(u - v);
}

bool NormedModel::is_lp_inf() const {
  const auto* lp = std::get_if<LpNorm>(&kind_);
  return lp != nullptr && lp->infinite;
}

std::string NormedModel::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LpNorm>) {
          os << "l";
          if (k.infinite)
            os << "inf";
          else
            os << k.p;
          os << "^" << dim_;
        } else if constexpr (std::is_same_v<K, PolyhedralNorm>) {
          os << "polyhedral^" << dim_ << "[" << k.functionals.rows() << "]";
        } else {
          os << "(" << k.factor->describe() << ")^" << k.copies << "max";
        }
      },
      kind_);
  return os.str();
}

double norm_eval(const NormedModel& model, const Eigen::Ref<const Vector>& v) { return model.norm(v); }

double distance(const NormedModel& model, const Eigen::Ref<const Vector>& u, const Eigen::Ref<const Vector>& v) {
  return model.distance(u, v);
}

PointConfig::PointConfig(NormedModel model, Matrix points) : model_(std::move(model)), points_(std::move(points)) {
  if (points_.cols() < 1) throw ValidationError("point configuration needs at least one point");
  if (points_.rows() != model_.dim()) {
    std::ostringstream os;
    os << "points have dimension " << points_.rows() << " but the model has dimension " << model_.dim();
    throw ValidationError(os.str());
  }
  if (!points_.allFinite()) throw ValidationError("point coordinates must be finite");
}

double PointConfig::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < size(); ++i)
    for (Index j = i + 1; j < size(); ++j) best = std::min(best, distance(i, j));
  return best;
}

double PointConfig::max_pairwise_distance() const {
  double worst = 0.0;
  for (Index i = 0; i < size(); ++i)
    for (Index j = i + 1; j < size(); ++j) worst = std::max(worst, distance(i, j));
  return worst;
}

double PointConfig::max_norm() const {
  double worst = 0.0;
  for (Index i = 0; i < size(); ++i) worst = std::max(worst, model_.norm(points_.col(i)));
  return worst;
}

PointConfig PointConfig::translated(const Eigen::Ref<const Vector>& shift) const {
  if (shift.size() != model_.dim()) throw InputError("shift has the wrong dimension");
  return PointConfig(model_, points_.colwise() + shift);
}

FiniteMetricSpace sample_subspace(const PointConfig& config) {
  const Index m = config.size();
  Matrix d = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      const double dij = config.distance(i, j);
      if (dij <= kCoincidenceTolerance)
        throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      d(i, j) = d(j, i) = dij;
    }
  return FiniteMetricSpace(std::move(d));
}

}  // namespace ghlab
