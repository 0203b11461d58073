#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmean/errors.hpp"
#include "fmean/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fmean::validation_error("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw fmean::validation_error("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-arithmetic f-means, conditional f-expectations, and"
               " certainty-equivalent pricing on finite probability spaces"};
  app.set_version_flag("--version", "fmean 1.0.0");

  std::string config_path;
  std::string out_path;
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<double> tol;

  app.add_option("--config", config_path, "Scenario config file (JSON)")
      ->required()
      ->type_name("PATH");
  app.add_option("--out", out_path, "Write the structured result record to this file")
      ->type_name("PATH");
  app.add_option("--seed", seed, "Override the scenario seed")->type_name("INT");
  app.add_option("--workers", workers, "Worker threads for Monte Carlo commands")
      ->type_name("INT");
  app.add_option("--tol", tol, "Override the scenario tolerance")->type_name("FLOAT");
  app.add_option("--format", format, "What to print on stdout")
      ->check(CLI::IsMember({"table", "csv", "structured"}))
      ->type_name("{table,csv,structured}");

  // One subcommand per operation; `run` (or no subcommand) defers to the
  // config file's own "command" field. Fallthrough lets the shared flags
  // appear on either side of the subcommand.
  app.require_subcommand(0, 1);
  app.add_subcommand("run", "Run the command named in the config file")->fallthrough();
  app.add_subcommand("mean", "f-mean of a point set")->fallthrough();
  app.add_subcommand("wmean", "Weighted f-mean of scalar points")->fallthrough();
  app.add_subcommand("cond-mean", "Best predictor E_f[X|G]")->fallthrough();
  app.add_subcommand("var-decomp", "Total variance identity check")->fallthrough();
  app.add_subcommand("prefer", "Blockwise conditional preference between two payoffs")
      ->fallthrough();
  app.add_subcommand("ce", "Certainty equivalent of a payoff")->fallthrough();
  app.add_subcommand("ce-schedule", "Markov conditional certainty-equivalent schedule")
      ->fallthrough();
  app.add_subcommand("martingale-check", "u-martingale property of the CE process")
      ->fallthrough();
  app.add_subcommand("exit-time", "Exit-time probability, exact and Monte Carlo")
      ->fallthrough();
  app.add_subcommand("estimate", "Empirical f-mean of a seeded sample")->fallthrough();
  app.add_subcommand("lln", "Law-of-large-numbers convergence diagnostic")->fallthrough();
  app.add_subcommand("clt", "Central-limit normality check of replicate sums")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    nlohmann::json config = load_config(config_path);
    for (const auto* sub : app.get_subcommands()) {
      if (sub->get_name() != "run") config["command"] = sub->get_name();
    }

    fmean::CliOverrides overrides;
    overrides.seed = seed;
    overrides.workers = workers;
    overrides.tol = tol;

    const fmean::RunResult result = fmean::run_scenario(config, overrides);

    if (format == "csv") std::cout << result.csv;
    else if (format == "structured") std::cout << result.structured.dump(2) << "\n";
    else std::cout << result.table;

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw fmean::validation_error("cannot open output file '" + out_path + "'");
      out << result.structured.dump(2) << "\n";
    }
    return 0;
  } catch (const fmean::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const fmean::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
