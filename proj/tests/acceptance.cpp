// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "ghlab/equilateral.hpp"
#include "ghlab/gh_bounds.hpp"
#include "ghlab/gh_exact.hpp"
#include "ghlab/imbalance.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace ghlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED{" << what << "}";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const SearchBudget kBudget{};
constexpr std::uint64_t kSeed = kDefaultSeed;

void ac1(Outcome& o) {
  const auto t0 = Clock::now();
  const auto spaces = oracle::small_integer_spaces();
  int pairs = 0, mismatches = 0;
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      ++pairs;
      const GHResult r = gh_exact(x, y);
      if (!r.exact || 2 * r.distance != oracle::brute_force_min_distortion(x, y)) ++mismatches;
    }
  const double secs = seconds_since(t0);
  o.detail << pairs << " pairs, " << mismatches << " mismatches, " << secs << " s";
  o.require(mismatches == 0, "branch and bound equals enumeration");
  o.require(secs <= 60.0, "runtime <= 60 s");
}

void ac2(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<Index> size(1, 5);
  const FiniteMetricSpace point(Matrix::Zero(1, 1));
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto y = oracle::random_space(rng, size(rng));
    worst = std::max(worst, std::abs(gh_exact(point, y).distance - y.diameter() / 2));
  }
  const std::vector<double> a{0, 1}, b{0, 2};
  const double two = gh_exact(FiniteMetricSpace::on_line(a), FiniteMetricSpace::on_line(b)).distance;
  o.detail << "max |gh - diam/2| = " << worst << ", gh({0,1},{0,2}) = " << two;
  o.require(worst <= 1e-12, "one-point closed form within 1e-12");
  o.require(two == 0.5, "two-point value exactly 0.5");
}

void ac3(Outcome& o) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<Index> size(1, 4);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto x = oracle::random_space(rng, size(rng));
    const auto y = oracle::random_space(rng, size(rng));
    const double base = gh_exact(x, y).distance;
    for (double lambda : {0.5, 2.0, 10.0}) {
      const double scaled = gh_exact(scale(x, lambda), scale(y, lambda)).distance;
      const double err = base == 0.0 ? scaled : std::abs(scaled - lambda * base) / (lambda * base);
      worst = std::max(worst, err);
    }
  }
  o.detail << "max relative error " << worst;
  o.require(worst <= 1e-9, "relative error <= 1e-9");
}

void ac4(Outcome& o) {
  const auto t0 = Clock::now();
  const auto c = c_m_upper(NormedModel::line(), 3, kBudget, kSeed);
  const auto raw = search_imbalance(NormedModel::line(), 3, kBudget, kSeed);
  const double grid = oracle::line_imbalance_grid_min(100000);
  const double secs = seconds_since(t0);
  o.detail << "c = " << c.value << " (" << to_string(c.tag) << "), raw search " << raw.value << ", grid oracle " << grid
           << ", " << secs << " s";
  o.require(std::abs(c.value - 1.0) <= 1e-6 && c.tag == CertTag::exact, "certified c_3(line) = 1 exact");
  o.require(std::abs(raw.value - 1.0) <= 1e-6, "search alone within 1e-6");
  o.require(grid >= c.value - 1e-9 && std::abs(grid - 1.0) <= 1e-3, "grid oracle agrees");
  o.require(secs <= 30.0, "runtime <= 30 s");
}

void ac5(Outcome& o) {
  double prev = -1.0, worst = 0.0, worst_raw = 0.0;
  bool increasing = true, exact = true;
  for (Index m = 2; m <= 8; ++m) {
    const double expected = 0.5 * static_cast<double>(m - 1);
    const auto r = r_m_upper(NormedModel::line(), m, kBudget, kSeed + static_cast<std::uint64_t>(m));
    const auto raw = search_packing(NormedModel::line(), m, kBudget, kSeed + static_cast<std::uint64_t>(m));
    worst = std::max(worst, std::abs(r.value - expected));
    worst_raw = std::max(worst_raw, std::abs(raw.value - expected));
    exact = exact && r.tag == CertTag::exact;
    increasing = increasing && r.value > prev;
    prev = r.value;
  }
  o.detail << "max |R_m - (m-1)/2| = " << worst << " (raw search " << worst_raw << "), R_8 - 2 = " << prev - 2
           << " lower-bounds c_8";
  o.require(worst <= 1e-6 && exact, "certified R_m = (m-1)/2");
  o.require(worst_raw <= 1e-6, "search alone within 1e-6");
  o.require(increasing, "R_m strictly increasing");
}

void ac6(Outcome& o) {
  const auto linf = NormedModel::lp_inf(2);
  const auto eq = equilateral_search(linf, 4, kBudget, kSeed);
  const auto c = c_m_upper(linf, 4, kBudget, kSeed);
  const auto r = r_m_upper(linf, 4, kBudget, kSeed);
  const auto raw_r = search_packing(linf, 4, kBudget, kSeed);
  bool cap_ok = true;
  for (Index m = 2; m <= 6; ++m)
    if (equilateral_search(linf, m, kBudget, kSeed + static_cast<std::uint64_t>(m)).success && m > 4) cap_ok = false;
  const Index ed = ed_evidence(linf, kBudget, kSeed);
  o.detail << "spread " << eq.relative_spread() << ", c_4 = " << c.value << " (" << to_string(c.tag) << "), R_4 = " << r.value
           << " (raw " << raw_r.value << "), ed evidence " << ed;
  o.require(eq.success && eq.relative_spread() <= 1e-9, "zero-spread 4-set");
  o.require(c.value == 0.0 && c.tag == CertTag::exact, "c_4 = 0 exact");
  o.require(std::abs(r.value - 0.5) <= 1e-6 && std::abs(raw_r.value - 0.5) <= 1e-6, "R_4 = 1/2");
  o.require(cap_ok && ed <= 4, "no equilateral set beyond 2^n");
}

void ac7(Outcome& o) {
  const auto line = inequality_audit(NormedModel::line(), 3, kBudget, kSeed);
  const auto linf = inequality_audit(NormedModel::lp_inf(2), 4, kBudget, kSeed);
  const auto l2 = inequality_audit(NormedModel::lp(2, 2), 4, kBudget, kSeed);
  auto conclusive_pass = [](const AuditReport& a) {
    return a.check("stated_upper").passed && a.check("stated_upper").conclusive && a.check("stated_lower").passed &&
           a.check("stated_lower").conclusive;
  };
  const auto& step = l2.check("constructive_step");
  o.detail << "line margins (" << line.check("stated_upper").margin << ", " << line.check("stated_lower").margin
           << "), linf margins (" << linf.check("stated_upper").margin << ", " << linf.check("stated_lower").margin
           << "), l2 constructive margin " << step.margin;
  o.require(conclusive_pass(line), "line m=3 conclusive");
  o.require(conclusive_pass(linf), "linf^2 m=4 conclusive");
  o.require(step.passed && step.margin >= 0.7, "l2^2 m=4 constructive step margin >= 0.7");
}

CertifiedValue exact(double v) {
  CertifiedValue c;
  c.value = v;
  c.tag = CertTag::exact;
  return c;
}

void ac8(Outcome& o) {
  const double sixth = equilateral_gap_bound({3, 1.0}, exact(1.0)).bound;
  bool monotone = true, linear = true, capped = true;
  double prev = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double c = 0.01 * k;
    const double b = equilateral_gap_bound({3, 1.0}, exact(c)).bound;
    monotone = monotone && b >= prev;
    capped = capped && b <= 0.25;
    prev = b;
    for (double d : {0.5, 3.0, 100.0}) {
      const double bd = equilateral_gap_bound({3, d}, exact(c)).bound;
      linear = linear && std::abs(bd - d * b) <= 1e-12 * d;
      capped = capped && bd <= d / 4;
    }
  }
  const double big = equilateral_gap_bound({3, 1.0}, exact(1e6)).bound;

  const auto x = FiniteMetricSpace::equilateral(3, 1.0);
  const double floor = std::min(0.5, 1.0 / 3.0);
  double least = std::numeric_limits<double>::infinity();
  std::size_t samples = 0, correspondences = 0;
  auto check_sample = [&](const std::vector<double>& pts) {
    const auto y = FiniteMetricSpace::on_line(pts);
    ++samples;
    for (const auto& pairs : oracle::all_correspondences(x.size(), y.size())) {
      ++correspondences;
      least = std::min(least, distortion(Relation(pairs), x, y));
    }
  };
  std::vector<double> grid;
  for (int i = 0; i <= 8; ++i) grid.push_back(0.25 * i);
  for (unsigned mask = 1; mask < (1u << grid.size()); ++mask) {
    std::vector<double> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask >> i & 1) pts.push_back(grid[i]);
    if (pts.size() <= 4) check_sample(pts);
  }
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_int_distribution<int> count(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts) p = coord(rng);
    bool distinct = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) distinct = distinct && pts[i] != pts[j];
    if (distinct) check_sample(pts);
  }

  o.detail << "bound(1,3,1) = " << sixth << ", bound(c=1e6) = " << big << ", min distortion " << least << " over "
           << correspondences << " correspondences / " << samples << " line samples";
  o.require(sixth == 1.0 / 6.0, "bound = 1/6 exactly");
  o.require(monotone, "monotone in c");
  o.require(linear, "linear in d");
  o.require(capped && std::abs(big - 0.25) <= 1e-6, "capped by d/4, limit 1/4");
  o.require(least >= floor - 1e-9, "every correspondence has distortion >= 1/3");
}

void ac9(Outcome& o) {
  const std::vector<double> lambdas{1, 10, 100, 1000};
  const auto s = infinite_distance_sweep(NormedModel::lp(2, 2), NormedModel::line(), 3, lambdas, kBudget, kSeed);
  bool values = s.rows.size() == lambdas.size(), increasing = true, valid = true;
  double prev = 0.0;
  for (std::size_t i = 0; values && i < lambdas.size(); ++i) {
    const double b = s.rows[i].bound;
    values = values && std::abs(b - lambdas[i] / 6.0) <= 1e-9 * lambdas[i];
    increasing = increasing && b > prev;
    valid = valid && s.rows[i].valid;
    prev = b;
    o.detail << (i ? ", " : "bounds ") << b;
  }
  o.require(s.equilateral_found, "equilateral triangle found in l2^2");
  o.require(values && valid, "bounds equal lambda/6 and are valid");
  o.require(increasing, "strictly increasing");
}

void ac10(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = min_distortion_embedding(FiniteMetricSpace::equilateral(4, 1.0), NormedModel::line(),
                                          SearchBudget{50, kBudget.iterations}, kSeed);
  const double secs = seconds_since(t0);
  o.detail << "distortion " << r.distortion << ", " << secs << " s";
  o.require(std::abs(r.distortion - 0.5) <= 1e-3, "within 1e-3 of 1/2");
  o.require(secs <= 60.0, "runtime <= 60 s");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1  exact GH equals brute-force enumeration", ac1},
      {"AC2  closed-form GH values", ac2},
      {"AC3  GH scaling law", ac3},
      {"AC4  line imbalance c_3 = 1", ac4},
      {"AC5  line packing R_m = (m-1)/2", ac5},
      {"AC6  l_inf^2 suite", ac6},
      {"AC7  imbalance/packing inequality audit", ac7},
      {"AC8  equilateral gap bound engine", ac8},
      {"AC9  infinite-distance sweep", ac9},
      {"AC10 minimal-distortion embedding", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
