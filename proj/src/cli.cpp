#include "ghlab/cli.hpp"

#include "ghlab/equilateral.hpp"
#include "ghlab/gh_bounds.hpp"
#include "ghlab/imbalance.hpp"
#include "ghlab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ghlab::cli {
namespace {

using io::Json;

const std::vector<std::pair<std::string, Command>>& command_names() {
  static const std::vector<std::pair<std::string, Command>> names{
      {"gh", Command::gh},         {"embed", Command::embed},   {"equilateral", Command::equilateral},
      {"imbalance", Command::imbalance}, {"packing", Command::packing}, {"audit", Command::audit},
      {"bound", Command::bound},   {"sweep", Command::sweep}};
  return names;
}

std::string name_of(Command c) {
  for (const auto& [n, cmd] : command_names())
    if (cmd == c) return n;
  return "?";
}

const std::string& require(const std::string& path, const char* flag) {
  if (path.empty()) throw ParseError(std::string("missing required option ") + flag, "command line");
  return path;
}

Index require_m(const RunConfig& config) {
  if (!config.m) throw ParseError("missing required option --m", "command line");
  return *config.m;
}

NormedModel load_model(const std::string& path, const char* flag) {
  return io::model_from_json(io::read_file(require(path, flag)));
}

FiniteMetricSpace load_space(const std::string& path, const char* flag) {
  return io::space_from_json(io::read_file(require(path, flag)));
}

CertifiedValue imbalance_input(const RunConfig& config) {
  if (!config.cert_path.empty()) {
    const Json j = io::read_file(config.cert_path);
    if (!config.model_path.empty()) return io::certified_value_from_json(j, load_model(config.model_path, "--model"));
    Json stripped = j;
    stripped.erase("witness");
    return io::certified_value_from_json(stripped, NormedModel::line());
  }
  if (!config.c) throw ParseError("bound needs --c or --cert", "command line");
  CertifiedValue c;
  c.value = *config.c;
  c.tag = cert_tag_from_string(config.c_tag);
  c.provenance = "supplied on the command line";
  return c;
}

void require_json(const RunConfig& config) {
  if (config.format != Format::json)
    throw ParseError("csv output is not available for '" + name_of(config.command) + "'", "--format");
}

std::string execute(const RunConfig& config, std::ostream& err) {
  const bool csv = config.format == Format::csv;
  switch (config.command) {
    case Command::gh: {
      require_json(config);
      const auto x = load_space(config.x_path, "--x");
      const auto y = load_space(config.y_path, "--y");
      const GHResult result = gh_exact(x, y, config.node_budget);
      if (!result.exact) err << "node budget exhausted; distance is an upper bound\n";
      return io::dump(io::to_json(result));
    }
    case Command::embed: {
      require_json(config);
      const auto x = load_space(config.x_path, "--x");
      const auto model = load_model(config.model_path, "--model");
      return io::dump(io::to_json(min_distortion_embedding(x, model, config.budget, config.seed)));
    }
    case Command::equilateral: {
      require_json(config);
      const auto model = load_model(config.model_path, "--model");
      if (config.m) return io::dump(io::to_json(equilateral_search(model, *config.m, config.budget, config.seed, config.tol)));
      Json j;
      j["ed_lower_bound"] = ed_evidence(model, config.budget, config.seed);
      j["cap"] = model.dim() < 63 ? (Index{1} << model.dim()) : Index{-1};
      return io::dump(j);
    }
    case Command::imbalance: {
      require_json(config);
      const auto model = load_model(config.model_path, "--model");
      return io::dump(io::to_json(c_m_upper(model, require_m(config), config.budget, config.seed)));
    }
    case Command::packing: {
      require_json(config);
      const auto model = load_model(config.model_path, "--model");
      return io::dump(io::to_json(r_m_upper(model, require_m(config), config.budget, config.seed)));
    }
    case Command::audit: {
      const auto model = load_model(config.model_path, "--model");
      const AuditReport report = inequality_audit(model, require_m(config), config.budget, config.seed);
      if (csv) return io::audit_csv_header() + io::audit_csv_row(model.describe(), report);
      Json j;
      j["model"] = model.describe();
      j.update(io::to_json(report));
      return io::dump(j);
    }
    case Command::bound: {
      const BoundReport report = equilateral_gap_bound(EquilateralSpec{require_m(config), config.d}, imbalance_input(config));
      if (!report.valid) err << "imbalance is not bounded from below; the bound is not sound\n";
      return csv ? io::bound_csv_header() + io::bound_csv_row(report) : io::dump(io::to_json(report));
    }
    case Command::sweep: {
      const auto x_model = load_model(config.x_model_path, "--x-model");
      const Index m = require_m(config);
      SweepReport report;
      if (!config.cert_path.empty() || config.c) {
        report = infinite_distance_sweep(x_model, imbalance_input(config), m, config.lambdas, config.budget, config.seed);
      } else {
        const auto y_model = load_model(config.y_model_path, "--y-model");
        report = infinite_distance_sweep(x_model, y_model, m, config.lambdas, config.budget, config.seed);
      }
      if (!report.diagnostic.empty()) err << report.diagnostic << "\n";
      if (csv) {
        std::string s = io::bound_csv_header();
        for (const auto& row : report.rows) s += io::bound_csv_row(row);
        return s;
      }
      Json j;
      j["m"] = m;
      j["equilateral_found"] = report.equilateral_found;
      j["equilateral"] = report.equilateral ? io::to_json(*report.equilateral) : Json(nullptr);
      j["c"] = io::to_json(report.c);
      Json rows = Json::array();
      for (const auto& row : report.rows) rows.push_back(io::to_json(row));
      j["rows"] = std::move(rows);
      j["diagnostic"] = report.diagnostic;
      return io::dump(j);
    }
  }
  throw InputError("unknown command");
}

}  // namespace

std::optional<Command> command_from_string(const std::string& name) {
  for (const auto& [n, cmd] : command_names())
    if (n == name) return cmd;
  return std::nullopt;
}

bool apply_environment(RunConfig& config) {
  const char* env = std::getenv("GHLAB_SEED");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') return false;
  config.seed = v;
  return true;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.budget.validate();
    const std::string payload = execute(config, err);
    if (config.out_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << config.out_path << "\n";
        return kExitFailure;
      }
      file << payload;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ghlab::cli
