#include "ghlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ghlab::io {
namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(key).dump() << ": ";
      write(os, value, indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
      return is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar));
    });
    os << "[";
    bool first = true;
    for (const auto& e : j) {
      if (!first) os << ",";
      if (flat) {
        if (!first) os << " ";
      } else {
        os << "\n" << inner;
      }
      first = false;
      write(os, e, indent + 2);
    }
    if (!flat && !j.empty()) os << "\n" << pad;
    os << "]";
  } else if (j.is_number_float()) {
    os << format_double(j.get<double>());
  } else {
    os << j.dump();
  }
}

[[noreturn]] void schema_error(const std::string& what, const std::string& where) { throw ParseError(what, where); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing key '") + key + "'", where);
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) schema_error("expected a number", where);
  return j.get<double>();
}

Index integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error("expected an integer", where);
  return j.get<Index>();
}

Matrix matrix_rows(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_error("expected a non-empty array of rows", where);
  const auto rows = static_cast<Index>(j.size());
  Index cols = -1;
  Matrix out;
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!row.is_array()) schema_error("expected an array", at);
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
      out.resize(rows, cols);
    } else if (static_cast<Index>(row.size()) != cols) {
      throw ValidationError("row " + std::to_string(r) + " of " + where + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c)
      out(r, c) = number(row[static_cast<std::size_t>(c)], at + "[" + std::to_string(c) + "]");
  }
  return out;
}

Json matrix_to_rows(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite values cannot be serialised");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), source + ":byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Json to_json(const FiniteMetricSpace& space) {
  Json j;
  j["labels"] = space.labels();
  j["dist"] = matrix_to_rows(space.dist());
  return j;
}

FiniteMetricSpace space_from_json(const Json& j) {
  Matrix dist = matrix_rows(field(j, "dist", "$"), "$.dist");
  if (!j.contains("labels")) return FiniteMetricSpace(std::move(dist));
  const Json& labels = j["labels"];
  if (!labels.is_array()) schema_error("expected an array", "$.labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.push_back(labels[i].is_string() ? labels[i].get<std::string>() : labels[i].dump());
  return FiniteMetricSpace(std::move(out), std::move(dist));
}

Json to_json(const GHResult& result) {
  Json j;
  j["distance"] = result.distance;
  Json pairs = Json::array();
  for (const auto& [a, b] : result.optimal.pairs()) pairs.push_back(Json::array({a, b}));
  j["correspondence"] = std::move(pairs);
  j["exact"] = result.exact;
  j["nodes_explored"] = result.nodes_explored;
  return j;
}

GHResult gh_result_from_json(const Json& j, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  std::vector<IndexPair> pairs;
  const Json& arr = field(j, "correspondence", "$");
  if (!arr.is_array()) schema_error("expected an array", "$.correspondence");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "$.correspondence[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) schema_error("expected an index pair", at);
    pairs.emplace_back(integer(arr[i][0], at), integer(arr[i][1], at));
  }
  const Json& exact = field(j, "exact", "$");
  if (!exact.is_boolean()) schema_error("expected a boolean", "$.exact");
  std::uint64_t nodes = 0;
  if (j.contains("nodes_explored")) nodes = static_cast<std::uint64_t>(integer(j["nodes_explored"], "$.nodes_explored"));
  return GHResult{number(field(j, "distance", "$"), "$.distance"), Correspondence(std::move(pairs), x.size(), y.size()),
                  nodes, exact.get<bool>()};
}

Json to_json(const NormedModel& model) {
  Json j;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LpNorm>) {
          j["type"] = "lp";
          j["dim"] = model.dim();
          if (k.infinite)
            j["p"] = "inf";
          else
            j["p"] = k.p;
        } else if constexpr (std::is_same_v<K, PolyhedralNorm>) {
          j["type"] = "polyhedral";
          j["dim"] = model.dim();
          j["functionals"] = matrix_to_rows(k.functionals);
        } else {
          j["type"] = "product_max";
          j["dim"] = model.dim();
          j["factor"] = to_json(*k.factor);
          j["copies"] = k.copies;
        }
      },
      model.kind());
  return j;
}

namespace {

NormedModel model_from_json_at(const Json& j, const std::string& where) {
  const Json& type = field(j, "type", where);
  if (!type.is_string()) schema_error("expected a string", where + ".type");
  const std::string t = type.get<std::string>();
  if (t == "lp") {
    const Index dim = integer(field(j, "dim", where), where + ".dim");
    const Json& p = field(j, "p", where);
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") schema_error("p must be a number or \"inf\"", where + ".p");
      return NormedModel::lp_inf(dim);
    }
    return NormedModel::lp(dim, number(p, where + ".p"));
  }
  if (t == "polyhedral") {
    Matrix f = matrix_rows(field(j, "functionals", where), where + ".functionals");
    if (j.contains("dim") && integer(j["dim"], where + ".dim") != f.cols())
      throw ValidationError("polyhedral functionals do not match the declared dimension");
    return NormedModel::polyhedral(std::move(f));
  }
  if (t == "product_max") {
    const NormedModel factor = model_from_json_at(field(j, "factor", where), where + ".factor");
    return product_max_norm(factor, integer(field(j, "copies", where), where + ".copies"));
  }
  schema_error("unknown model type '" + t + "'", where + ".type");
}

}  // namespace

NormedModel model_from_json(const Json& j) { return model_from_json_at(j, "$"); }

Json points_to_json(const Matrix& points) { return matrix_to_rows(points.transpose()); }

Matrix points_from_json(const Json& j, Index dim) {
  Matrix rows = matrix_rows(j, "$.points");
  if (rows.cols() != dim)
    throw ValidationError("points have dimension " + std::to_string(rows.cols()) + " but the model has dimension " +
                          std::to_string(dim));
  return rows.transpose();
}

Json to_json(const EquilateralReport& report) {
  Json j;
  j["m"] = report.config.size();
  j["success"] = report.success;
  j["common_distance"] = report.common_distance;
  j["spread"] = report.spread;
  j["points"] = points_to_json(report.config.points());
  return j;
}

EquilateralReport equilateral_report_from_json(const Json& j, const NormedModel& model) {
  PointConfig config(model, points_from_json(field(j, "points", "$"), model.dim()));
  if (integer(field(j, "m", "$"), "$.m") != config.size()) throw ValidationError("m does not match the point count");
  const EquilateralReport fresh = is_equilateral(config);
  const Json& success = field(j, "success", "$");
  if (!success.is_boolean()) schema_error("expected a boolean", "$.success");
  return EquilateralReport{std::move(config), number(field(j, "common_distance", "$"), "$.common_distance"),
                           number(field(j, "spread", "$"), "$.spread"), success.get<bool>() && fresh.success};
}

Json to_json(const CertifiedValue& value) {
  Json j;
  j["value"] = value.value;
  j["tag"] = to_string(value.tag);
  j["witness"] = value.witness ? points_to_json(value.witness->points()) : Json(nullptr);
  j["provenance"] = value.provenance;
  return j;
}

CertifiedValue certified_value_from_json(const Json& j, const NormedModel& model) {
  CertifiedValue out;
  out.value = number(field(j, "value", "$"), "$.value");
  const Json& tag = field(j, "tag", "$");
  if (!tag.is_string()) schema_error("expected a string", "$.tag");
  try {
    out.tag = cert_tag_from_string(tag.get<std::string>());
  } catch (const InputError& e) {
    schema_error(e.what(), "$.tag");
  }
  if (j.contains("witness") && !j["witness"].is_null())
    out.witness = PointConfig(model, points_from_json(j["witness"], model.dim()));
  if (j.contains("provenance") && j["provenance"].is_string()) out.provenance = j["provenance"].get<std::string>();
  return out;
}

namespace {

std::string status(const AuditCheck& c) {
  const std::string verdict = c.passed ? "pass" : "fail";
  return c.conclusive ? verdict : "heuristic-" + verdict;
}

}  // namespace

Json to_json(const AuditReport& report) {
  Json j;
  j["m"] = report.m;
  j["c"] = to_json(report.c);
  j["r"] = to_json(report.r);
  j["constructive_r_from_c"] = report.constructive_r_from_c;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = status(c);
    cj["passed"] = c.passed;
    cj["conclusive"] = c.conclusive;
    cj["margin"] = c.margin;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string audit_csv_header() {
  return "model,m,c,c_tag,r,r_tag,r_from_c,constructive_step,constructive_step_margin,stated_upper,"
         "stated_upper_margin,stated_lower,stated_lower_margin\n";
}

std::string audit_csv_row(const std::string& model, const AuditReport& report) {
  std::ostringstream os;
  os << model << "," << report.m << "," << format_double(report.c.value) << "," << to_string(report.c.tag) << ","
     << format_double(report.r.value) << "," << to_string(report.r.tag) << ","
     << format_double(report.constructive_r_from_c);
  for (const char* name : {"constructive_step", "stated_upper", "stated_lower"}) {
    const AuditCheck& c = report.check(name);
    os << "," << status(c) << "," << format_double(c.margin);
  }
  os << "\n";
  return os.str();
}

Json to_json(const BoundReport& report) {
  Json j;
  j["lambda"] = report.lambda;
  j["d"] = report.spec.d;
  j["m"] = report.spec.m;
  j["c"] = report.c;
  j["c_tag"] = to_string(report.c_tag);
  j["bound"] = report.bound;
  j["valid"] = report.valid;
  return j;
}

std::string bound_csv_header() { return "lambda,d,m,c,c_tag,bound,valid\n"; }

std::string bound_csv_row(const BoundReport& report) {
  std::ostringstream os;
  os << format_double(report.lambda) << "," << format_double(report.spec.d) << "," << report.spec.m << ","
     << format_double(report.c) << "," << to_string(report.c_tag) << "," << format_double(report.bound) << ","
     << (report.valid ? "true" : "false") << "\n";
  return os.str();
}

Json to_json(const EmbeddingResult& result) {
  Json j;
  j["distortion"] = result.distortion;
  j["points"] = points_to_json(result.placement.points());
  return j;
}

}  // namespace ghlab::io
