#pragma once

#include "ghlab/gh_bounds.hpp"
#include "ghlab/gh_exact.hpp"

#include <json.hpp>

#include <string>

namespace ghlab::io {

using Json = nlohmann::ordered_json;

/// Serialises with fixed key order and every float at 17 significant digits.
std::string dump(const Json& j);
/// Parses text, turning syntax errors into ParseError with a byte offset.
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);

std::string format_double(double x);

Json to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const Json& j);

Json to_json(const GHResult& result);
GHResult gh_result_from_json(const Json& j, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

Json to_json(const NormedModel& model);
NormedModel model_from_json(const Json& j);

Json points_to_json(const Matrix& points);
Matrix points_from_json(const Json& j, Index dim);

Json to_json(const EquilateralReport& report);
EquilateralReport equilateral_report_from_json(const Json& j, const NormedModel& model);

Json to_json(const CertifiedValue& value);
CertifiedValue certified_value_from_json(const Json& j, const NormedModel& model);

Json to_json(const AuditReport& report);
std::string audit_csv_header();
std::string audit_csv_row(const std::string& model, const AuditReport& report);

Json to_json(const BoundReport& report);
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report);

Json to_json(const EmbeddingResult& result);

}  // namespace ghlab::io
