#include "ghlab/gh_bounds.hpp"
#include "ghlab/gh_exact.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ghlab;

namespace {

const SearchBudget kBudget{};

CertifiedValue cert(double value, CertTag tag) {
  CertifiedValue c;
  c.value = value;
  c.tag = tag;
  return c;
}

}  // namespace

TEST(EquilateralGapBoundTest, Examples) {
  const auto b = equilateral_gap_bound({3, 1.0}, cert(1.0, CertTag::exact));
  EXPECT_EQ(b.bound, 1.0 / 6.0);
  EXPECT_TRUE(b.valid);
  EXPECT_EQ(equilateral_gap_bound({3, 1.0}, cert(0.0, CertTag::exact)).bound, 0.0);
  EXPECT_NEAR(equilateral_gap_bound({3, 1.0}, cert(1e6, CertTag::exact)).bound, 0.25, 1e-6);
  EXPECT_FALSE(equilateral_gap_bound({3, 1.0}, cert(1.0, CertTag::upper)).valid);
  EXPECT_TRUE(equilateral_gap_bound({3, 1.0}, cert(1.0, CertTag::lower)).valid);
}

TEST(EquilateralGapBoundTest, Errors) {
  EXPECT_THROW(equilateral_gap_bound({2, 1.0}, cert(1.0, CertTag::exact)), InputError);
  EXPECT_THROW(equilateral_gap_bound({3, 0.0}, cert(1.0, CertTag::exact)), InputError);
  EXPECT_THROW(equilateral_gap_bound({3, 1.0}, cert(-0.1, CertTag::exact)), InputError);
}

TEST(EquilateralGapBoundTest, MonotoneLinearAndCapped) {
  double prev = 0.0;
  for (double c = 0.0; c < 50.0; c += 0.37) {
    const double b = equilateral_gap_bound({4, 1.0}, cert(c, CertTag::exact)).bound;
    EXPECT_GE(b, prev);
    EXPECT_LE(b, 0.25);
    prev = b;
    for (double d : {0.1, 2.0, 1e4}) {
      const double bd = equilateral_gap_bound({4, d}, cert(c, CertTag::exact)).bound;
      EXPECT_NEAR(bd, d * b, 1e-12 * d);
      EXPECT_LE(bd, d / 4);
    }
  }
}

TEST(EquilateralGapBoundTest, DistortionOfEveryCorrespondenceToLineSamples) {
  // Any correspondence between an equilateral triple (d = 1) and a subset of
  // the line has distortion at least min{1/2, 1/3}.
  const auto x = FiniteMetricSpace::equilateral(3, 1.0);
  const double floor = std::min(0.5, 1.0 / 3.0);
  std::vector<double> grid;
  for (int i = 0; i <= 6; ++i) grid.push_back(0.5 * i);
  for (unsigned mask = 1; mask < (1u << grid.size()); ++mask) {
    std::vector<double> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask >> i & 1) pts.push_back(grid[i]);
    if (pts.size() > 4) continue;
    const auto y = FiniteMetricSpace::on_line(pts);
    for (const auto& pairs : oracle::all_correspondences(x.size(), y.size()))
      ASSERT_GE(distortion(Relation(pairs), x, y), floor - 1e-9);
    EXPECT_GE(gh_exact(x, y).distance, 1.0 / 6.0 - 1e-12);
  }
}

TEST(MinDistortionEmbeddingTest, Examples) {
  const std::vector<double> two{0.0, 1.0};
  const auto r2 = min_distortion_embedding(FiniteMetricSpace::on_line(two), NormedModel::line(), kBudget, 1);
  EXPECT_NEAR(r2.distortion, 0.0, 1e-9);

  const auto tri = min_distortion_embedding(FiniteMetricSpace::equilateral(3, 1.0), NormedModel::lp(2, 2), kBudget, 1);
  EXPECT_LE(tri.distortion, 1e-6);

  const double oracle = oracle::line_embedding_grid_min(4, 0.05, 2.0);
  EXPECT_NEAR(oracle, 0.5, 1e-12);
  const auto four = min_distortion_embedding(FiniteMetricSpace::equilateral(4, 1.0), NormedModel::line(), kBudget, 1);
  EXPECT_NEAR(four.distortion, oracle, 1e-3);
  EXPECT_GE(four.distortion, oracle - 1e-9);

  const auto single = min_distortion_embedding(FiniteMetricSpace(Matrix::Zero(1, 1)), NormedModel::lp(2, 2), kBudget, 1);
  EXPECT_EQ(single.distortion, 0.0);
  EXPECT_THROW(min_distortion_embedding(FiniteMetricSpace(Matrix::Zero(1, 1)), NormedModel::line(), SearchBudget{0, 1}, 1),
               InputError);
}

TEST(MinDistortionEmbeddingTest, NeverBeatsTheGapBound) {
  const auto line_c3 = c_m_upper(NormedModel::line(), 3, kBudget, 1);
  ASSERT_EQ(line_c3.tag, CertTag::exact);
  for (double d : {0.5, 1.0, 4.0}) {
    const auto bound = equilateral_gap_bound({3, d}, line_c3);
    ASSERT_TRUE(bound.valid);
    const auto r = min_distortion_embedding(FiniteMetricSpace::equilateral(3, d), NormedModel::line(), kBudget, 2);
    EXPECT_GE(r.distortion, 2 * bound.bound - 1e-9);
    EXPECT_NEAR(r.distortion, d / 3, 1e-6 * d);
    // The image is a finite subset of the line, so GH is bounded by half the distortion.
    EXPECT_LE(gh_exact(FiniteMetricSpace::equilateral(3, d), sample_subspace(r.placement)).distance,
              r.distortion / 2 + 1e-9);
  }
}

TEST(InfiniteDistanceSweepTest, EuclideanTriangleAgainstLine) {
  const std::vector<double> lambdas{1, 10, 100};
  const auto s = infinite_distance_sweep(NormedModel::lp(2, 2), NormedModel::line(), 3, lambdas, kBudget, 1);
  ASSERT_TRUE(s.equilateral_found);
  ASSERT_EQ(s.rows.size(), 3u);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    EXPECT_TRUE(s.rows[i].valid);
    EXPECT_NEAR(s.rows[i].bound, lambdas[i] / 6.0, 1e-9 * lambdas[i]);
    EXPECT_EQ(s.rows[i].lambda, lambdas[i]);
  }
}

TEST(InfiniteDistanceSweepTest, ValidityFollowsTag) {
  const std::vector<double> one{1.0};
  const auto upper = infinite_distance_sweep(NormedModel::lp(2, 2), cert(1.0, CertTag::upper), 3, one, kBudget, 1);
  ASSERT_EQ(upper.rows.size(), 1u);
  EXPECT_FALSE(upper.rows[0].valid);
  EXPECT_FALSE(upper.diagnostic.empty());

  const auto flat = infinite_distance_sweep(NormedModel::lp(2, 2), cert(0.0, CertTag::exact), 3, one, kBudget, 1);
  EXPECT_EQ(flat.rows[0].bound, 0.0);
}

TEST(InfiniteDistanceSweepTest, NoEquilateralSetIsDiagnosed) {
  const std::vector<double> one{1.0};
  const auto s = infinite_distance_sweep(NormedModel::line(), cert(1.0, CertTag::exact), 3, one, SearchBudget{4, 300}, 1);
  EXPECT_FALSE(s.equilateral_found);
  EXPECT_TRUE(s.rows.empty());
  EXPECT_FALSE(s.diagnostic.empty());
  const std::vector<double> bad{-1.0};
  EXPECT_THROW(infinite_distance_sweep(NormedModel::lp(2, 2), cert(1.0, CertTag::exact), 3, bad, kBudget, 1), InputError);
}
