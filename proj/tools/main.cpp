#include "ghlab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace ghlab::cli;

  CLI::App app{"ghlab: Gromov-Hausdorff distances, equilateral sets and metric imbalance of normed spaces"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "RNG seed (GHLAB_SEED overrides)");
    sub->add_option("--starts", config.budget.starts, "multistart count");
    sub->add_option("--iters", config.budget.iterations, "iterations per start");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "output file (default stdout)");
  };

  auto* gh = app.add_subcommand("gh", "exact GH distance between two finite metric spaces");
  gh->add_option("--x", config.x_path)->required();
  gh->add_option("--y", config.y_path)->required();
  gh->add_option("--nodes", config.node_budget, "branch-and-bound node budget");

  auto* embed = app.add_subcommand("embed", "minimal-distortion embedding of a finite space into a model");
  embed->add_option("--x", config.x_path)->required();
  embed->add_option("--model", config.model_path)->required();

  auto* equilateral = app.add_subcommand("equilateral", "equilateral-set search; without --m, equilateral dimension evidence");
  equilateral->add_option("--model", config.model_path)->required();
  equilateral->add_option("--m", config.m);
  equilateral->add_option("--tol", config.tol, "relative spread tolerance");

  auto* imbalance = app.add_subcommand("imbalance", "certified upper estimate of the metric imbalance c_m");
  imbalance->add_option("--model", config.model_path)->required();
  imbalance->add_option("--m", config.m)->required();

  auto* packing = app.add_subcommand("packing", "certified upper estimate of the packing radius R_m");
  packing->add_option("--model", config.model_path)->required();
  packing->add_option("--m", config.m)->required();

  auto* audit = app.add_subcommand("audit", "check 2R_m + 1 >= c_m >= R_m - 2 on certificates");
  audit->add_option("--model", config.model_path)->required();
  audit->add_option("--m", config.m)->required();

  auto* bound = app.add_subcommand("bound", "GH lower bound from an equilateral set and an imbalance value");
  bound->add_option("--m", config.m)->required();
  bound->add_option("--d", config.d, "equilateral diameter");
  bound->add_option("--c", config.c, "imbalance value");
  bound->add_option("--c-tag", config.c_tag)->check(CLI::IsMember({"exact", "upper", "lower"}));
  bound->add_option("--cert", config.cert_path, "CertifiedValue JSON");
  bound->add_option("--model", config.model_path, "model of the certificate witness");

  auto* sweep = app.add_subcommand("sweep", "GH lower bounds for scaled equilateral sets");
  sweep->add_option("--x-model", config.x_model_path)->required();
  sweep->add_option("--y-model", config.y_model_path);
  sweep->add_option("--m", config.m)->required();
  sweep->add_option("--lambdas", config.lambdas)->delimiter(',');
  sweep->add_option("--c", config.c, "imbalance value for the y model");
  sweep->add_option("--c-tag", config.c_tag)->check(CLI::IsMember({"exact", "upper", "lower"}));
  sweep->add_option("--cert", config.cert_path, "CertifiedValue JSON for the y model");

  for (auto* sub : {gh, embed, equilateral, imbalance, packing, audit, bound, sweep}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  config.command = *command_from_string(app.get_subcommands().front()->get_name());
  config.format = format == "csv" ? Format::csv : Format::json;
  if (!apply_environment(config)) {
    std::cerr << "parse error: GHLAB_SEED must be an unsigned integer\n";
    return kExitParse;
  }
  return run(config, std::cout, std::cerr);
}
