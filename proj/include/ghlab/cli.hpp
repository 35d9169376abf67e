#pragma once

#include "ghlab/common.hpp"
#include "ghlab/gh_exact.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghlab::cli {

enum class Command { gh, embed, equilateral, imbalance, packing, audit, bound, sweep };
enum class Format { json, csv };

std::optional<Command> command_from_string(const std::string& name);

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;

struct RunConfig {
  Command command = Command::gh;
  std::string x_path;
  std::string y_path;
  std::string model_path;
  std::string x_model_path;
  std::string y_model_path;
  std::string cert_path;
  std::optional<Index> m;
  double d = 1.0;
  std::optional<double> c;
  std::string c_tag = "upper";
  std::vector<double> lambdas{1.0, 10.0, 100.0, 1000.0};
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  SearchBudget budget;
  std::uint64_t node_budget = kDefaultNodeBudget;
  Format format = Format::json;
  std::string out_path;
};

/// Replaces the seed with GHLAB_SEED when that variable is set. Returns false
/// if the variable holds something other than an unsigned integer.
bool apply_environment(RunConfig& config);

/// Executes one command, writing the report to `out_path` or `out` and
/// diagnostics to `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ghlab::cli
