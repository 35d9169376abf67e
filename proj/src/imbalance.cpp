#include "ghlab/imbalance.hpp"

#include "ghlab/equilateral.hpp"
#include "ghlab/optimize.hpp"

#include <cmath>
#include <sstream>

namespace ghlab {

std::string to_string(CertTag tag) {
  switch (tag) {
    case CertTag::exact: return "exact";
    case CertTag::upper: return "upper";
    case CertTag::lower: return "lower";
  }
  return "upper";
}

CertTag cert_tag_from_string(const std::string& s) {
  if (s == "exact") return CertTag::exact;
  if (s == "upper") return CertTag::upper;
  if (s == "lower") return CertTag::lower;
  throw InputError("unknown certificate tag '" + s + "'");
}

double phi(const NormedModel& model, const Eigen::Ref<const Vector>& vi, const Eigen::Ref<const Vector>& vj,
           const Eigen::Ref<const Vector>& vk) {
  const double den = model.distance(vj, vk);
  if (den <= kCoincidenceTolerance) throw InputError("phi is undefined: v_j and v_k coincide");
  return std::abs(model.distance(vi, vk) / den - 1.0);
}

namespace {

// For a fixed apex k the worst ordered triple pairs its farthest and nearest
// neighbours, so the maximum over triples is max_k (far_k / near_k) - 1.
// Returns kInfeasible when two points (nearly) coincide.
double imbalance_of(const NormedModel& model, const Matrix& pts) {
  const Index m = pts.cols();
  Matrix d = Matrix::Zero(m, m);
  double largest = 0.0;
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      d(i, j) = d(j, i) = model.distance(pts.col(i), pts.col(j));
      largest = std::max(largest, d(i, j));
    }
  double worst = 0.0;
  for (Index k = 0; k < m; ++k) {
    double near = std::numeric_limits<double>::infinity(), far = 0.0;
    for (Index i = 0; i < m; ++i) {
      if (i == k) continue;
      near = std::min(near, d(i, k));
      far = std::max(far, d(i, k));
    }
    if (!(largest > 0.0) || near <= 1e-12 * largest) return kInfeasible;
    worst = std::max(worst, far / near - 1.0);
  }
  return worst;
}

double packing_penalised(const NormedModel& model, const Matrix& pts) {
  double radius = 0.0, violation = 0.0;
  for (Index i = 0; i < pts.cols(); ++i) {
    radius = std::max(radius, model.norm(pts.col(i)));
    for (Index j = i + 1; j < pts.cols(); ++j)
      violation += std::max(0.0, 1.0 - model.distance(pts.col(i), pts.col(j)));
  }
  return radius + 1e3 * violation;
}

// Closest pair moved to slots (0, 1), first point at the origin, unit minimum distance.
PointConfig normalise_for_imbalance(const NormedModel& model, const Matrix& pts) {
  const Index m = pts.cols();
  Index a = 0, b = 1;
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      const double d = model.distance(pts.col(i), pts.col(j));
      if (d < best) {
        best = d;
        a = i;
        b = j;
      }
    }
  Matrix out(pts.rows(), m);
  out.col(0) = pts.col(a);
  out.col(1) = pts.col(b);
  for (Index i = 0, c = 2; i < m; ++i)
    if (i != a && i != b) out.col(c++) = pts.col(i);
  out = (out.colwise() - Vector(pts.col(a))).eval() / best;
  return PointConfig(model, std::move(out));
}

// Scales up until every pair is at least 1 apart.
Matrix repair_separation(const NormedModel& model, Matrix pts) {
  const PointConfig probe(model, pts);
  if (pts.cols() < 2) return pts;
  double dmin = probe.min_pairwise_distance();
  if (dmin <= kCoincidenceTolerance) throw InputError("packing search collapsed two points");
  if (dmin < 1.0) pts /= dmin;
  for (int guard = 0; guard < 8 && PointConfig(model, pts).min_pairwise_distance() < 1.0; ++guard)
    pts *= 1.0 + 4 * std::numeric_limits<double>::epsilon();
  return pts;
}

Vector unit_vector(const NormedModel& model) {
  Vector e = Vector::Zero(model.dim());
  e(0) = 1.0;
  return e / model.norm(e);
}

std::string format(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

double max_triple_imbalance(const PointConfig& config) {
  if (config.size() < 3) throw InputError("max triple imbalance needs at least three points");
  if (config.min_pairwise_distance() <= kCoincidenceTolerance) throw InputError("configuration has coincident points");
  return imbalance_of(config.model(), config.points());
}

double enclosing_radius_at_origin(const PointConfig& config) { return config.max_norm(); }

SearchOutcome search_imbalance(const NormedModel& model, Index m, const SearchBudget& budget, std::uint64_t seed,
                               std::span<const PointConfig> seeds) {
  if (m < 3) throw InputError("metric imbalance needs m >= 3");
  budget.validate();
  const Index dim = model.dim();
  const Index free = (m - 1) * dim;

  auto to_points = [dim, m](const Vector& x) {
    Matrix pts = Matrix::Zero(dim, m);
    pts.rightCols(m - 1) = Eigen::Map<const Matrix>(x.data(), dim, m - 1);
    return pts;
  };
  const Objective objective = [&](const Vector& x) { return imbalance_of(model, to_points(x)); };
  const Initializer init = [&](std::mt19937_64& rng) {
    Vector x(free);
    for (Index i = 0; i + 1 < m; ++i) x.segment(i * dim, dim) = random_in_ball(dim, 1.0, rng);
    return x;
  };

  std::vector<Vector> starts;
  for (const auto& s : seeds) {
    if (s.size() != m || s.model().dim() != dim) throw InputError("seed configuration has the wrong shape");
    const PointConfig z = normalise_for_imbalance(model, s.points());
    starts.emplace_back(Eigen::Map<const Vector>(z.points().data() + dim, free));
  }

  const MinimizeResult best = multistart_minimize(objective, init, 1.0, budget, seed, starts);
  if (best.value >= kInfeasible) throw InputError("imbalance search found no configuration of distinct points");
  PointConfig witness = normalise_for_imbalance(model, to_points(best.x));
  const double value = max_triple_imbalance(witness);
  return {std::move(witness), value};
}

SearchOutcome search_packing(const NormedModel& model, Index m, const SearchBudget& budget, std::uint64_t seed) {
  if (m < 2) throw InputError("packing radius needs m >= 2");
  budget.validate();
  const Index dim = model.dim();
  const double radius = 0.5 * std::pow(static_cast<double>(m), 1.0 / static_cast<double>(dim)) + 0.5;

  auto to_points = [dim, m](const Vector& x) { return Eigen::Map<const Matrix>(x.data(), dim, m); };
  const Objective objective = [&](const Vector& x) { return packing_penalised(model, to_points(x)); };
  const Initializer init = [&](std::mt19937_64& rng) {
    Vector x(dim * m);
    for (Index i = 0; i < m; ++i) x.segment(i * dim, dim) = random_in_ball(dim, radius, rng);
    return x;
  };

  const MinimizeResult best = multistart_minimize(objective, init, radius, budget, seed);
  PointConfig witness(model, repair_separation(model, to_points(best.x)));
  const double value = witness.max_norm();
  return {std::move(witness), value};
}

namespace {

struct Registered {
  double lower;
  PointConfig witness;
  std::string argument;
};

std::optional<Registered> registered_imbalance(const NormedModel& model, Index m) {
  if (model.dim() == 1 && m == 3) {
    const Vector e = unit_vector(model);
    Matrix pts(1, 3);
    pts << 0.0, e(0), 2.0 * e(0);
    return Registered{1.0, PointConfig(model, pts),
                      "one-dimensional: normalised distances (1, t, 1 + t) give max(t, 1/t) >= 1"};
  }
  return std::nullopt;
}

std::optional<Registered> registered_packing(const NormedModel& model, Index m) {
  if (model.dim() == 1) {
    const Vector e = unit_vector(model);
    Matrix pts(1, m);
    for (Index i = 0; i < m; ++i) pts(0, i) = (static_cast<double>(i) - 0.5 * static_cast<double>(m - 1)) * e(0);
    return Registered{0.5 * static_cast<double>(m - 1), PointConfig(model, pts),
                      "one-dimensional: m 1-separated points span at least m - 1"};
  }
  if (m == 2) {
    const Vector e = unit_vector(model);
    Matrix pts(model.dim(), 2);
    pts.col(0) = 0.5 * e;
    pts.col(1) = -0.5 * e;
    return Registered{0.5, PointConfig(model, pts), "two 1-separated points force radius >= 1/2"};
  }
  if (model.is_lp_inf() && model.dim() < 63 && m <= (Index{1} << model.dim())) {
    Matrix pts(model.dim(), m);
    for (Index i = 0; i < m; ++i)
      for (Index b = 0; b < model.dim(); ++b) pts(b, i) = ((i >> b) & 1) ? 0.5 : -0.5;
    return Registered{0.5, PointConfig(model, pts),
                      "two 1-separated points force radius >= 1/2; cube vertices (+-1/2)^n attain it"};
  }
  return std::nullopt;
}

}  // namespace

CertifiedValue c_m_upper(const NormedModel& model, Index m, const SearchBudget& budget, std::uint64_t seed,
                         std::span<const PointConfig> seeds) {
  SearchOutcome found = search_imbalance(model, m, budget, seed, seeds);
  std::string provenance = "multistart pattern search: " + format(found.value);

  const auto reg = registered_imbalance(model, m);
  if (reg) {
    const double reg_value = max_triple_imbalance(reg->witness);
    if (reg_value < found.value) found = SearchOutcome{reg->witness, reg_value};
    if (found.value <= reg->lower + 1e-9)
      return {found.value, CertTag::exact, found.witness, provenance + "; lower bound " + format(reg->lower) + " (" + reg->argument + ")"};
  }
  if (found.value <= kEquilateralTolerance)
    return {0.0, CertTag::exact, found.witness,
            provenance + "; witness is equilateral within tolerance, so c_m = 0 (c_m >= 0 by definition)"};
  return {found.value, CertTag::upper, found.witness, provenance};
}

std::vector<CertifiedValue> c_m_upper_chain(const NormedModel& model, Index m_max, const SearchBudget& budget,
                                            std::uint64_t seed) {
  if (m_max < 3) throw InputError("imbalance chain needs m_max >= 3");
  std::vector<CertifiedValue> out(static_cast<std::size_t>(m_max - 2));
  std::vector<PointConfig> seeds;
  for (Index m = m_max; m >= 3; --m) {
    CertifiedValue c = c_m_upper(model, m, budget, seed + static_cast<std::uint64_t>(m), seeds);
    seeds.clear();
    const Matrix& w = c.witness->points();
    for (Index drop = 0; drop < m && m > 3; ++drop) {
      Matrix pts(w.rows(), m - 1);
      for (Index i = 0, col = 0; i < m; ++i)
        if (i != drop) pts.col(col++) = w.col(i);
      seeds.emplace_back(model, std::move(pts));
    }
    out[static_cast<std::size_t>(m - 3)] = std::move(c);
  }
  return out;
}

CertifiedValue r_m_upper(const NormedModel& model, Index m, const SearchBudget& budget, std::uint64_t seed) {
  SearchOutcome found = search_packing(model, m, budget, seed);
  std::string provenance = "penalised multistart pattern search: " + format(found.value);

  if (const auto reg = registered_packing(model, m)) {
    const double reg_value = reg->witness.max_norm();
    if (reg_value < found.value) found = SearchOutcome{reg->witness, reg_value};
    if (found.value <= reg->lower + 1e-9)
      return {found.value, CertTag::exact, found.witness, provenance + "; lower bound " + format(reg->lower) + " (" + reg->argument + ")"};
  }
  return {found.value, CertTag::upper, found.witness, provenance};
}

std::pair<Vector, double> chebyshev_center(const PointConfig& config, std::uint64_t seed) {
  const NormedModel& model = config.model();
  const Matrix& pts = config.points();
  const Objective objective = [&](const Vector& c) {
    double worst = 0.0;
    for (Index i = 0; i < pts.cols(); ++i) worst = std::max(worst, model.norm(pts.col(i) - c));
    return worst;
  };
  const Vector centroid = pts.rowwise().mean();
  const double scale = std::max(config.max_pairwise_distance(), 1e-12);
  auto rng = start_rng(seed, 0);
  MinimizeResult r = local_minimize(objective, centroid, scale, 600, rng);
  return {std::move(r.x), r.value};
}

const AuditCheck& AuditReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InputError("audit has no check named '" + name + "'");
}

AuditReport inequality_audit(const NormedModel& model, Index m, const SearchBudget& budget, std::uint64_t seed) {
  if (m < 3) throw InputError("audit needs m >= 3");
  AuditReport report;
  report.m = m;
  report.c = c_m_upper(model, m, budget, seed);
  report.r = r_m_upper(model, m, budget, seed + 1);

  // The imbalance witness already has z_1 = 0 and min |z_i z_j| = |z_1 z_2| = 1,
  // so it lies in B_{c+1}(0). Recentring can only shrink the ball.
  const PointConfig& z = *report.c.witness;
  PointConfig rebuilt = z;
  const auto [center, radius] = chebyshev_center(z, seed + 2);
  if (radius < z.max_norm()) rebuilt = z.translated(-center);
  report.constructive_r_from_c = rebuilt.max_norm();
  const double allowed = report.c.value + 1.0;
  const bool separated = rebuilt.min_pairwise_distance() >= 1.0 - 1e-9;
  report.checks.push_back({"constructive_step", separated && report.constructive_r_from_c <= allowed + 1e-6, true,
                           allowed - report.constructive_r_from_c});

  const double upper_margin = 2.0 * report.r.value + 1.0 - report.c.value;
  report.checks.push_back({"stated_upper", upper_margin >= -1e-9,
                           report.r.bounds_from_below() && report.c.bounds_from_above(), upper_margin});

  const double lower_margin = report.c.value - (report.r.value - 2.0);
  report.checks.push_back({"stated_lower", lower_margin >= -1e-9,
                           report.c.bounds_from_below() && report.r.bounds_from_above(), lower_margin});
  return report;
}

}  // namespace ghlab
