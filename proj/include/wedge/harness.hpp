// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Experiment harness: seeded Monte Carlo campaigns with CSV and SVG
 *         output, plus JSON-configurable run settings shared by the CLI.
 *
 *  Every campaign is deterministic given (config, seed): per-trial RNG
 *  streams are derived from the seed, the dimension, and the trial index,
 *  so results are independent of execution order. The only non-reproducible
 *  CSV column is wall_ms (measured wall-clock time).
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wedge/antisym_tensor.hpp"

namespace wedge {

// ============================================================================
// Configuration
// ============================================================================

/**
 * @brief Campaign settings shared by all subcommands.
 *
 * Defaults: p=3, field=real, seed=0, alpha=0.5. trials=0 and restarts=0
 * mean "resolve automatically": trials follow the sampling protocol of
 * default_trials (per command and dimension) and restarts follow
 * default_restarts. Empty d_values selects a per-command default range;
 * empty out_csv selects a per-command default file name; empty plot_svg
 * disables plotting.
 */
struct ExperimentConfig {
  int p = 3;                   ///< Tensor order (or block count for spectra).
  std::vector<int> d_values;   ///< Dimensions to sweep; empty = command default.
  Field field = Field::real;   ///< Scalar field for sampled tensors.
  int trials = 0;              ///< Trials per dimension; 0 = automatic.
  int restarts = 0;            ///< Optimizer restarts; 0 = automatic.
  std::uint64_t seed = 0;      ///< Campaign seed; all streams derive from it.
  double alpha = 0.5;          ///< Ratio p/d for the gamma bound table.
  std::string out_csv;         ///< Output CSV path; empty = command default.
  std::string plot_svg;        ///< Optional SVG path; empty = no plot.
};

/**
 * @brief Command-line values that overlay a config: every field is optional
 *        and, when present, wins over the JSON file value.
 */
struct ConfigOverrides {
  std::optional<int> p;
  std::optional<int> d;
  std::optional<int> d_min;
  std::optional<int> d_max;
  std::optional<int> d_step;
  std::optional<std::string> field;
  std::optional<int> trials;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::optional<std::string> out;
  std::optional<std::string> plot;
};

/**
 * @brief Builds a config from an optional JSON file and flag overrides.
 *
 * The JSON object mirrors the flags exactly: keys p, d, d_min, d_max,
 * d_step, field, trials, restarts, seed, alpha, out, plot. A single "d"
 * yields one dimension; d_min/d_max/d_step yield an inclusive range
 * (default step 10). Flags win over JSON on conflict, field by field.
 *
 * @throws std::runtime_error if the file cannot be read or parsed.
 * @throws std::invalid_argument on unknown keys, conflicting or invalid
 *         dimension settings, or out-of-range values.
 */
[[nodiscard]] ExperimentConfig make_config(const std::string& json_path,
                                           const ConfigOverrides& overrides);

/**
 * @brief Sampling protocol: trials per (order, dimension).
 *
 * p <= 2: 200. p = 3: 100 for d <= 250, else 20. p = 4: 100 for d <= 70,
 * else 10. p >= 5: 20.
 */
[[nodiscard]] int default_trials(int p, int d);

/// Optimizer restarts: 20 for p >= 4, else 10.
[[nodiscard]] int default_restarts(int p);

// ============================================================================
// Run records
// ============================================================================

/// One Monte Carlo trial of an injective norm estimate.
struct RunRecord {
  std::uint64_t seed = 0;   ///< Campaign seed (identical for all rows of a run).
  int trial = 0;            ///< Trial index within the dimension.
  Field field = Field::real;
  int p = 0;
  int d = 0;
  double estimate = 0.0;    ///< Injective norm estimate.
  double normalized = 0.0;  ///< estimate / sqrt(d - p).
  int iterations = 0;       ///< Total ascent iterations (0 for exact paths).
  int restarts_used = 0;    ///< Restarts run (0 for exact paths).
  double wall_ms = 0.0;     ///< Wall-clock time of the trial, milliseconds.
};

/// The fixed CSV schema of RunRecord rows.
inline constexpr const char* kRunRecordHeader =
    "seed,trial,field,p,d,estimate,normalized,iterations,restarts_used,wall_ms";

/// Writes one record as a CSV row (full float precision, trailing newline).
void write_run_record(std::ostream& out, const RunRecord& record);

// ============================================================================
// Subcommands
// ============================================================================

/**
 * @brief Injective norm sweep over dimensions: samples tensors, estimates
 *        the norm (exact singular-value path for p <= 2, multi-start ascent
 *        otherwise), and writes one RunRecord row per trial.
 *
 * The optional SVG overlays per-dimension mean normalized estimates with
 * the analytic bound line alpha(p). Per-trial failures are recorded as
 * comment lines and the run continues. Summary lines go to `log`.
 */
void run_injnorm_sweep(const ExperimentConfig& config, std::ostream& log);

/**
 * @brief Order-3 comparison: antisymmetric ascent vs dense asymmetric
 *        (alternating power iteration) vs symmetric (spherical ascent)
 *        Gaussian tensors, with per-trial ratios.
 *
 * CSV columns: d,trial,skew,asym,sym,skew_over_asym,skew_over_sym.
 *
 * @throws std::invalid_argument unless config.p == 3.
 */
void run_ratio_figure(const ExperimentConfig& config, std::ostream& log);

/**
 * @brief Bound tables: writes <stem>_alpha.csv (p, E0, alpha),
 *        <stem>_beta.csv (alpha, beta, beta_mirror), and <stem>_gamma.csv
 *        (d, alpha, gamma, gamma_expansion) where <stem> is out_csv without
 *        its .csv suffix (default stem "bounds").
 */
void run_bounds(const ExperimentConfig& config, std::ostream& log);

/**
 * @brief Spectral histogram of the block ensemble with m = d - p inner
 *        dimension, pooled over trials, against the analytic density.
 *
 * CSV columns: bin_lo,bin_hi,emp_density,theory_density. The pooled L1
 * distance and the spectral edge check are reported on `log`.
 */
void run_spectra(const ExperimentConfig& config, std::ostream& log);

/**
 * @brief Duality gaps: per trial, the injective norms of T and of its
 *        Hodge dual, their relative gap, and the entanglement values of the
 *        shared normalized state. Quantiles are reported on `log`.
 *
 * CSV columns: trial,inj_t,inj_dual,relative_gap,gme_t,gme_dual.
 */
void run_duality(const ExperimentConfig& config, std::ostream& log);

/**
 * @brief Samples one Gaussian antisymmetric tensor and writes it in the
 *        tensor CSV format to out_csv (default tensor.csv).
 */
void run_sample_tensor(const ExperimentConfig& config, std::ostream& log);

}  // namespace wedge
