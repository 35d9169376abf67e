#include "ghlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ghlab {
namespace {

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void validate_metric(const Matrix& d) {
  const Index n = d.rows();
  if (n == 0) throw ValidationError("metric space must have at least one point");
  if (d.cols() != n) throw ValidationError("distance matrix must be square");
  if (!d.allFinite()) throw ValidationError("distance matrix has non-finite entries");
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  const double tol = kMetricTolerance * scale;
  for (Index i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw ValidationError("diagonal entry " + std::to_string(i) + " is not zero");
    for (Index j = i + 1; j < n; ++j) {
      if (d(i, j) <= 0.0) {
        std::ostringstream os;
        os << "distance between distinct points " << i << " and " << j << " must be positive";
        throw ValidationError(os.str());
      }
      if (std::abs(d(i, j) - d(j, i)) > tol) {
        std::ostringstream os;
        os << "distance matrix is not symmetric at (" << i << ", " << j << ")";
        throw ValidationError(os.str());
      }
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (d(i, k) > d(i, j) + d(j, k) + tol) {
          std::ostringstream os;
          os << "triangle inequality fails for (" << i << ", " << j << ", " << k << ")";
          throw ValidationError(os.str());
        }
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(Matrix dist) : FiniteMetricSpace({}, std::move(dist)) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, Matrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  validate_metric(dist_);
  if (labels_.empty()) labels_ = default_labels(dist_.rows());
  if (static_cast<Index>(labels_.size()) != dist_.rows())
    throw ValidationError("label count does not match the distance matrix");
  // Store an exactly symmetric matrix.
  dist_ = (0.5 * (dist_ + dist_.transpose())).eval();
}

FiniteMetricSpace FiniteMetricSpace::on_line(std::span<const double> coords) {
  const auto n = static_cast<Index>(coords.size());
  Matrix d(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d(i, j) = std::abs(coords[i] - coords[j]);
  return FiniteMetricSpace(std::move(d));
}

FiniteMetricSpace FiniteMetricSpace::equilateral(Index m, double d) {
  if (m < 1) throw InputError("equilateral space needs m >= 1");
  Matrix dist = Matrix::Constant(m, m, d);
  dist.diagonal().setZero();
  return FiniteMetricSpace(std::move(dist));
}

double FiniteMetricSpace::diameter() const { return dist_.maxCoeff(); }

Relation::Relation(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InputError("relation must be non-empty");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::valid_for(Index x_size, Index y_size) const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const IndexPair& p) {
    return p.first >= 0 && p.first < x_size && p.second >= 0 && p.second < y_size;
  });
}

bool is_correspondence(const Relation& rel, Index x_size, Index y_size) {
  if (!rel.valid_for(x_size, y_size)) return false;
  std::vector<bool> hit_x(static_cast<std::size_t>(x_size)), hit_y(static_cast<std::size_t>(y_size));
  for (const auto& [i, j] : rel.pairs()) {
    hit_x[static_cast<std::size_t>(i)] = true;
    hit_y[static_cast<std::size_t>(j)] = true;
  }
  return std::all_of(hit_x.begin(), hit_x.end(), [](bool b) { return b; }) &&
         std::all_of(hit_y.begin(), hit_y.end(), [](bool b) { return b; });
}

Correspondence::Correspondence(std::vector<IndexPair> pairs, Index x_size, Index y_size)
    : Relation(std::move(pairs)), x_size_(x_size), y_size_(y_size) {
  if (!is_correspondence(*this, x_size, y_size))
    throw InputError("relation is not a correspondence: some point is left uncovered or out of range");
}

Correspondence Correspondence::identity(Index n) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(std::move(pairs), n, n);
}

Correspondence Correspondence::from_maps(std::span<const Index> f, std::span<const Index> g) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(static_cast<Index>(i), f[i]);
  for (std::size_t j = 0; j < g.size(); ++j) pairs.emplace_back(g[j], static_cast<Index>(j));
  return Correspondence(std::move(pairs), static_cast<Index>(f.size()), static_cast<Index>(g.size()));
}

double distortion(const Relation& rel, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (!rel.valid_for(x.size(), y.size())) throw InputError("relation indexes a point outside its spaces");
  const auto& p = rel.pairs();
  double worst = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      worst = std::max(worst, std::abs(x(p[a].first, p[b].first) - y(p[a].second, p[b].second)));
  return worst;
}

namespace {

double directed(std::span<const Index> from, std::span<const Index> to, const FiniteMetricSpace& s) {
  double worst = 0.0;
  for (Index a : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Index b : to) nearest = std::min(nearest, s(a, b));
    worst = std::max(worst, nearest);
  }
  return worst;
}

void check_subset(std::span<const Index> a, const FiniteMetricSpace& s, const char* name) {
  if (a.empty()) throw InputError(std::string("subset ") + name + " is empty");
  for (Index i : a)
    if (i < 0 || i >= s.size()) throw InputError(std::string("subset ") + name + " has an index out of range");
}

}  // namespace

double hausdorff(std::span<const Index> a, std::span<const Index> b, const FiniteMetricSpace& space) {
  check_subset(a, space, "A");
  check_subset(b, space, "B");
  return std::max(directed(a, b, space), directed(b, a, space));
}

FiniteMetricSpace scale(const FiniteMetricSpace& space, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("scale factor must be positive");
  return FiniteMetricSpace(space.labels(), lambda * space.dist());
}

}  // namespace ghlab
