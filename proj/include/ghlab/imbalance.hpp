#pragma once

#include "ghlab/normed_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghlab {

enum class CertTag { exact, upper, lower };

std::string to_string(CertTag tag);
CertTag cert_tag_from_string(const std::string& s);

/// A reported quantity together with the evidence behind it.
///
/// An `upper` value carries a witness whose objective evaluates to `value`
/// within 1e-9. An `exact` value additionally rests on a lower argument
/// recorded in `provenance`.
struct CertifiedValue {
  double value = 0.0;
  CertTag tag = CertTag::upper;
  std::optional<PointConfig> witness;
  std::string provenance;

  bool bounds_from_below() const { return tag == CertTag::exact || tag == CertTag::lower; }
  bool bounds_from_above() const { return tag == CertTag::exact || tag == CertTag::upper; }
};

/// | ||vi - vk|| / ||vj - vk|| - 1 |. Throws when vj and vk coincide.
double phi(const NormedModel& model, const Eigen::Ref<const Vector>& vi,
           const Eigen::Ref<const Vector>& vj, const Eigen::Ref<const Vector>& vk);

/// Max of phi over ordered triples of distinct indices. Needs m >= 3 distinct points.
double max_triple_imbalance(const PointConfig& config);

/// Largest norm of a point; the packing objective once the configuration is 1-separated.
double enclosing_radius_at_origin(const PointConfig& config);

/// Outcome of a raw search, before any exactness argument is applied.
struct SearchOutcome {
  PointConfig witness;
  double value;
};

/// Minimises max_triple_imbalance over m-point configurations. The witness is
/// normalised: first point at the origin, closest pair (0, 1) at distance 1.
SearchOutcome search_imbalance(const NormedModel& model, Index m, const SearchBudget& budget,
                               std::uint64_t seed, std::span<const PointConfig> seeds = {});

/// Minimises the largest norm of m points that are pairwise at least 1 apart.
/// The returned witness is always feasible.
SearchOutcome search_packing(const NormedModel& model, Index m, const SearchBudget& budget,
                             std::uint64_t seed);

/// Certified upper estimate of the metric imbalance c_m. Exact for the line
/// with m = 3 (value 1) and whenever a witness is equilateral within
/// kEquilateralTolerance (value 0).
CertifiedValue c_m_upper(const NormedModel& model, Index m, const SearchBudget& budget,
                         std::uint64_t seed, std::span<const PointConfig> seeds = {});

/// c_m_upper for m = m_max down to 3, seeding each order with every one-point
/// deletion of the next witness. Element k holds order k + 3.
std::vector<CertifiedValue> c_m_upper_chain(const NormedModel& model, Index m_max,
                                            const SearchBudget& budget, std::uint64_t seed);

/// Certified upper estimate of the packing radius R_m. Exact when a known lower
/// bound is matched: (m - 1) / 2 in dimension one, 1/2 for m = 2, and 1/2 for
/// l_inf^n with m <= 2^n.
CertifiedValue r_m_upper(const NormedModel& model, Index m, const SearchBudget& budget,
                         std::uint64_t seed);

/// Translation of `config` that minimises (approximately) the largest norm,
/// together with that norm. Any center gives a valid enclosing radius.
std::pair<Vector, double> chebyshev_center(const PointConfig& config, std::uint64_t seed);

struct AuditCheck {
  std::string name;
  bool passed = false;
  /// Sound only when the certificate tags allow the comparison.
  bool conclusive = false;
  double margin = 0.0;
};

struct AuditReport {
  Index m = 0;
  CertifiedValue c;
  CertifiedValue r;
  double constructive_r_from_c = 0.0;
  std::vector<AuditCheck> checks;

  const AuditCheck& check(const std::string& name) const;
};

/// Checks 2R_m + 1 >= c_m and c_m >= R_m - 2 on the certificates, plus the
/// constructive step R_m <= c_m + 1 rebuilt from the imbalance witness.
AuditReport inequality_audit(const NormedModel& model, Index m, const SearchBudget& budget,
                             std::uint64_t seed);

}  // namespace ghlab
