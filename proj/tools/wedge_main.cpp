// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Command-line front end: subcommands for the experiment campaigns.
 *
 *  Settings may come from a JSON config file (--config) whose keys mirror
 *  the flags; explicit flags win. Runtime failures are reported as one
 *  machine-readable JSON line on stderr with a nonzero exit code.
 */

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedge/harness.hpp"

namespace {

struct CliState {
  wedge::ConfigOverrides overrides;
  std::string config_path;
};

void add_common_flags(CLI::App* command, CliState& state) {
  command->add_option("--p", state.overrides.p, "Tensor order p");
  command->add_option("--d", state.overrides.d, "Single ambient dimension");
  command->add_option("--d-min", state.overrides.d_min,
                      "Smallest dimension of a sweep range");
  command->add_option("--d-max", state.overrides.d_max,
                      "Largest dimension of a sweep range (inclusive)");
  command->add_option("--d-step", state.overrides.d_step,
                      "Dimension increment of a sweep range (default 10)");
  command->add_option("--field", state.overrides.field,
                      "Scalar field: real or complex");
  command->add_option("--trials", state.overrides.trials,
                      "Trials per dimension (0 = automatic)");
  command->add_option("--restarts", state.overrides.restarts,
                      "Optimizer restarts (0 = automatic)");
  command->add_option("--seed", state.overrides.seed, "Campaign RNG seed");
  command->add_option("--alpha", state.overrides.alpha,
                      "Ratio p/d for the gamma bound table");
  command->add_option("--out", state.overrides.out, "Output CSV path");
  command->add_option("--plot", state.overrides.plot, "Optional SVG plot path");
  command->add_option("--config", state.config_path,
                      "JSON config file; explicit flags win");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian antisymmetric tensor experiments"};
  app.require_subcommand(1);
  CliState state;

  CLI::App* sweep = app.add_subcommand(
      "injnorm-sweep", "Injective norm estimates over a dimension sweep");
  CLI::App* ratio = app.add_subcommand(
      "ratio-figure",
      "Order-3 comparison: antisymmetric vs asymmetric vs symmetric");
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Analytic bound tables: alpha(p), beta(alpha), gamma_alpha(d)");
  CLI::App* spectra = app.add_subcommand(
      "spectra", "Pooled eigenvalue histogram of the block ensemble");
  CLI::App* duality = app.add_subcommand(
      "duality", "Injective norm of T vs its Hodge dual on random tensors");
  CLI::App* sample = app.add_subcommand(
      "sample-tensor", "Sample one Gaussian tensor and write it as CSV");
  for (CLI::App* command : {sweep, ratio, bounds, spectra, duality, sample}) {
    add_common_flags(command, state);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    std::cerr << nlohmann::json{{"error", err.what()}}.dump() << '\n';
    return err.get_exit_code();
  }

  try {
    const wedge::ExperimentConfig config =
        wedge::make_config(state.config_path, state.overrides);
    if (sweep->parsed()) {
      wedge::run_injnorm_sweep(config, std::cout);
    } else if (ratio->parsed()) {
      wedge::run_ratio_figure(config, std::cout);
    } else if (bounds->parsed()) {
      wedge::run_bounds(config, std::cout);
    } else if (spectra->parsed()) {
      wedge::run_spectra(config, std::cout);
    } else if (duality->parsed()) {
      wedge::run_duality(config, std::cout);
    } else if (sample->parsed()) {
      wedge::run_sample_tensor(config, std::cout);
    }
  } catch (const std::exception& err) {
    std::cerr << nlohmann::json{{"error", err.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
