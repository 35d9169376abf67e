#pragma once

#include "ghlab/common.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ghlab {

/// Relative tolerance used when validating metric axioms.
inline constexpr double kMetricTolerance = 1e-9;

/// A finite metric space given by labels and an explicit distance matrix.
///
/// Construction validates symmetry, a zero diagonal, positive off-diagonal
/// entries and the triangle inequality (relative tolerance kMetricTolerance).
/// Empty spaces are rejected.
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(Matrix dist);
  FiniteMetricSpace(std::vector<std::string> labels, Matrix dist);

  /// Points of the real line with |x - y| distances.
  static FiniteMetricSpace on_line(std::span<const double> coords);
  /// m points at common distance d.
  static FiniteMetricSpace equilateral(Index m, double d);

  Index size() const { return dist_.rows(); }
  double operator()(Index i, Index j) const { return dist_(i, j); }
  const Matrix& dist() const { return dist_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double diameter() const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix dist_;
};

using IndexPair = std::pair<Index, Index>;

/// A non-empty set of index pairs (x in X, y in Y), kept sorted and unique.
class Relation {
 public:
  explicit Relation(std::vector<IndexPair> pairs);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool valid_for(Index x_size, Index y_size) const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::vector<IndexPair> pairs_;
};

/// A relation whose projections onto both factors are surjective.
class Correspondence : public Relation {
 public:
  Correspondence(std::vector<IndexPair> pairs, Index x_size, Index y_size);

  static Correspondence identity(Index n);
  /// graph(f) united with the transpose of graph(g).
  static Correspondence from_maps(std::span<const Index> f, std::span<const Index> g);

  Index x_size() const { return x_size_; }
  Index y_size() const { return y_size_; }

 private:
  Index x_size_;
  Index y_size_;
};

bool is_correspondence(const Relation& rel, Index x_size, Index y_size);

/// sup of | |xx'| - |yy'| | over pairs of pairs of `rel`.
double distortion(const Relation& rel, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Hausdorff distance between two non-empty index subsets of `space`.
double hausdorff(std::span<const Index> a, std::span<const Index> b, const FiniteMetricSpace& space);

/// Every distance multiplied by `lambda` (> 0).
FiniteMetricSpace scale(const FiniteMetricSpace& space, double lambda);

}  // namespace ghlab
