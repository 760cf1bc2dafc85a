// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Implementation of the experiment harness (config handling, CSV
 *         campaigns, and plots).
 */

#include "wedge/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedge/asymptotics.hpp"
#include "wedge/baselines.hpp"
#include "wedge/ensembles.hpp"
#include "wedge/grassmann.hpp"
#include "wedge/rng.hpp"
#include "wedge/scores.hpp"
#include "wedge/svg.hpp"

namespace wedge {

namespace {

using nlohmann::json;

// ============================================================================
// Small shared helpers
// ============================================================================

constexpr const char* kColorOrange = "#ff7f0e";
constexpr const char* kColorGreen = "#2ca02c";

[[nodiscard]] std::vector<int> make_range(int d_min, int d_max, int d_step) {
  if (d_min < 1) {
    throw std::invalid_argument("d_min must be >= 1, got " +
                                std::to_string(d_min));
  }
  if (d_max < d_min) {
    throw std::invalid_argument("d_max must be >= d_min, got d_min=" +
                                std::to_string(d_min) +
                                " d_max=" + std::to_string(d_max));
  }
  if (d_step < 1) {
    throw std::invalid_argument("d_step must be >= 1, got " +
                                std::to_string(d_step));
  }
  std::vector<int> dims;
  for (int d = d_min; d <= d_max; d += d_step) dims.push_back(d);
  return dims;
}

/// Per-trial RNG stream root: deterministic in (seed, dimension, trial).
[[nodiscard]] std::uint64_t trial_stream(std::uint64_t seed, int d, int trial) {
  return derive_stream(derive_stream(seed, static_cast<std::uint64_t>(d)),
                       static_cast<std::uint64_t>(trial));
}

[[nodiscard]] std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

[[nodiscard]] std::string csv_path_or(const ExperimentConfig& config,
                                      const char* fallback) {
  return config.out_csv.empty() ? std::string(fallback) : config.out_csv;
}

[[nodiscard]] std::vector<int> dims_or(const ExperimentConfig& config,
                                       std::vector<int> fallback) {
  return config.d_values.empty() ? std::move(fallback) : config.d_values;
}

[[nodiscard]] int resolve_restarts(const ExperimentConfig& config) {
  return config.restarts > 0 ? config.restarts : default_restarts(config.p);
}

[[nodiscard]] int resolve_trials(const ExperimentConfig& config, int d) {
  return config.trials > 0 ? config.trials : default_trials(config.p, d);
}

void set_full_precision(std::ostream& out) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
}

[[nodiscard]] std::string join_ints(const std::vector<int>& values) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) joined += ',';
    joined += std::to_string(values[i]);
  }
  return joined;
}

void write_optimizer_metadata(std::ostream& out, const OptimizerConfig& opt) {
  out << "# method=ascent restarts=" << opt.restarts
      << " max_iters=" << opt.max_iters << " initial_step=" << opt.initial_step
      << " backtrack=" << opt.backtrack << " grad_tol=" << opt.grad_tol << '\n';
}

/// Linear-interpolation quantile of an unsorted sample; q in [0, 1].
[[nodiscard]] double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return (1.0 - frac) * values[lo] + frac * values[hi];
}

// ============================================================================
// Config assembly
// ============================================================================

struct JsonDims {
  std::optional<int> d;
  std::optional<int> d_min;
  std::optional<int> d_max;
  std::optional<int> d_step;
};

void apply_json(const std::string& json_path, ExperimentConfig& config,
                JsonDims& dims) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open config file " + json_path);
  json data;
  try {
    in >> data;
  } catch (const json::parse_error& err) {
    throw std::runtime_error("cannot parse config file " + json_path + ": " +
                             err.what());
  }
  if (!data.is_object()) {
    throw std::runtime_error("config file " + json_path +
                             " must contain a JSON object");
  }
  static constexpr std::array<const char*, 12> kKeys = {
      "p",     "d",        "d_min", "d_max", "d_step", "field",
      "trials", "restarts", "seed",  "alpha", "out",    "plot"};
  for (const auto& item : data.items()) {
    const bool known =
        std::any_of(kKeys.begin(), kKeys.end(),
                    [&](const char* key) { return item.key() == key; });
    if (!known) {
      throw std::invalid_argument("unknown config key \"" + item.key() +
                                  "\" in " + json_path);
    }
  }
  if (data.contains("p")) config.p = data.at("p").get<int>();
  if (data.contains("d")) dims.d = data.at("d").get<int>();
  if (data.contains("d_min")) dims.d_min = data.at("d_min").get<int>();
  if (data.contains("d_max")) dims.d_max = data.at("d_max").get<int>();
  if (data.contains("d_step")) dims.d_step = data.at("d_step").get<int>();
  if (data.contains("field")) {
    config.field = parse_field(data.at("field").get<std::string>());
  }
  if (data.contains("trials")) config.trials = data.at("trials").get<int>();
  if (data.contains("restarts")) {
    config.restarts = data.at("restarts").get<int>();
  }
  if (data.contains("seed")) {
    config.seed = data.at("seed").get<std::uint64_t>();
  }
  if (data.contains("alpha")) config.alpha = data.at("alpha").get<double>();
  if (data.contains("out")) config.out_csv = data.at("out").get<std::string>();
  if (data.contains("plot")) {
    config.plot_svg = data.at("plot").get<std::string>();
  }
}

// ============================================================================
// Per-trial workers (templated on the scalar field)
// ============================================================================

template <typename Scalar>
[[nodiscard]] RunRecord sweep_trial(const ExperimentConfig& config, int d,
                                    int trial, int restarts) {
  RunRecord record;
  record.seed = config.seed;
  record.trial = trial;
  record.field = config.field;
  record.p = config.p;
  record.d = d;
  const std::uint64_t stream = trial_stream(config.seed, d, trial);
  const auto start = std::chrono::steady_clock::now();
  const auto tensor =
      sample_gaussian<Scalar>(d, config.p, derive_stream(stream, 0));
  if (config.p == 1) {
    record.estimate = std::sqrt(hs_norm_sq(tensor));
  } else if (config.p == 2) {
    record.estimate = injnorm_exact_p2(tensor);
  } else {
    OptimizerConfig opt;
    opt.restarts = restarts;
    opt.rng_seed = derive_stream(stream, 1);
    const auto result = injnorm_estimate(tensor, opt);
    record.estimate = result.best_value;
    record.iterations = std::accumulate(result.restart_iterations.begin(),
                                        result.restart_iterations.end(), 0);
    record.restarts_used = restarts;
  }
  record.normalized = record.estimate / std::sqrt(static_cast<double>(d - config.p));
  const auto stop = std::chrono::steady_clock::now();
  record.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return record;
}

struct DualityTrial {
  double inj_t = 0.0;
  double inj_dual = 0.0;
  double relative_gap = 0.0;
  double gme_t = 0.0;
  double gme_dual = 0.0;
};

template <typename Scalar>
[[nodiscard]] DualityTrial duality_trial(const ExperimentConfig& config, int d,
                                         int trial, int restarts) {
  const std::uint64_t stream = trial_stream(config.seed, d, trial);
  const auto tensor =
      sample_gaussian<Scalar>(d, config.p, derive_stream(stream, 0));
  OptimizerConfig opt;
  opt.restarts = restarts;
  opt.rng_seed = derive_stream(stream, 1);
  const DualityReport report = duality_check(tensor, opt);
  // Both entanglement values normalize by the same Hilbert-Schmidt norm so
  // that they compare the two estimates on one unit state.
  const double norm = std::sqrt(hs_norm_sq(tensor));
  DualityTrial result;
  result.inj_t = report.inj_t;
  result.inj_dual = report.inj_hodge_t;
  result.relative_gap = report.relative_gap;
  result.gme_t = gme(report.inj_t / norm);
  result.gme_dual = gme(report.inj_hodge_t / norm);
  return result;
}

}  // namespace

// ============================================================================
// Configuration
// ============================================================================

ExperimentConfig make_config(const std::string& json_path,
                             const ConfigOverrides& overrides) {
  ExperimentConfig config;
  JsonDims json_dims;
  if (!json_path.empty()) apply_json(json_path, config, json_dims);

  if (overrides.p) config.p = *overrides.p;
  if (overrides.field) config.field = parse_field(*overrides.field);
  if (overrides.trials) config.trials = *overrides.trials;
  if (overrides.restarts) config.restarts = *overrides.restarts;
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.alpha) config.alpha = *overrides.alpha;
  if (overrides.out) config.out_csv = *overrides.out;
  if (overrides.plot) config.plot_svg = *overrides.plot;

  const bool flag_range =
      overrides.d_min || overrides.d_max || overrides.d_step;
  if (overrides.d && flag_range) {
    throw std::invalid_argument(
        "specify either d or a d_min/d_max range, not both");
  }
  const bool json_range = json_dims.d_min || json_dims.d_max || json_dims.d_step;
  if (json_dims.d && json_range) {
    throw std::invalid_argument(
        "config file: specify either d or a d_min/d_max range, not both");
  }
  if (overrides.d) {
    if (*overrides.d < 1) {
      throw std::invalid_argument("d must be >= 1, got " +
                                  std::to_string(*overrides.d));
    }
    config.d_values = {*overrides.d};
  } else if (flag_range || json_range) {
    const std::optional<int> lo =
        overrides.d_min ? overrides.d_min : json_dims.d_min;
    const std::optional<int> hi =
        overrides.d_max ? overrides.d_max : json_dims.d_max;
    const int step = overrides.d_step
                         ? *overrides.d_step
                         : (json_dims.d_step ? *json_dims.d_step : 10);
    if (!lo || !hi) {
      throw std::invalid_argument(
          "a dimension range needs both d_min and d_max");
    }
    config.d_values = make_range(*lo, *hi, step);
  } else if (json_dims.d) {
    if (*json_dims.d < 1) {
      throw std::invalid_argument("config file: d must be >= 1, got " +
                                  std::to_string(*json_dims.d));
    }
    config.d_values = {*json_dims.d};
  }

  if (config.p < 1) {
    throw std::invalid_argument("p must be >= 1, got " +
                                std::to_string(config.p));
  }
  if (config.trials < 0) {
    throw std::invalid_argument("trials must be >= 0, got " +
                                std::to_string(config.trials));
  }
  if (config.restarts < 0) {
    throw std::invalid_argument("restarts must be >= 0, got " +
                                std::to_string(config.restarts));
  }
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0)) {
    std::ostringstream message;
    message << "alpha must lie in (0, 1), got " << config.alpha;
    throw std::invalid_argument(message.str());
  }
  return config;
}

int default_trials(int p, int d) {
  if (p < 1) {
    throw std::invalid_argument("default_trials: requires p >= 1, got " +
                                std::to_string(p));
  }
  if (d < 1) {
    throw std::invalid_argument("default_trials: requires d >= 1, got " +
                                std::to_string(d));
  }
  if (p <= 2) return 200;
  if (p == 3) return d <= 250 ? 100 : 20;
  if (p == 4) return d <= 70 ? 100 : 10;
  return 20;
}

int default_restarts(int p) {
  if (p < 1) {
    throw std::invalid_argument("default_restarts: requires p >= 1, got " +
                                std::to_string(p));
  }
  return p >= 4 ? 20 : 10;
}

// ============================================================================
// Run records
// ============================================================================

void write_run_record(std::ostream& out, const RunRecord& record) {
  set_full_precision(out);
  out << record.seed << ',' << record.trial << ',' << field_name(record.field)
      << ',' << record.p << ',' << record.d << ',' << record.estimate << ','
      << record.normalized << ',' << record.iterations << ','
      << record.restarts_used << ',' << record.wall_ms << '\n';
}

// ============================================================================
// Injective norm sweep
// ============================================================================

void run_injnorm_sweep(const ExperimentConfig& config, std::ostream& log) {
  const std::vector<int> dims =
      dims_or(config, config.p == 2 ? std::vector<int>{50, 100, 200, 400}
                                    : std::vector<int>{20, 40, 60});
  for (const int d : dims) {
    if (d <= config.p) {
      throw std::invalid_argument("injnorm-sweep requires d > p, got d=" +
                                  std::to_string(d) +
                                  " p=" + std::to_string(config.p));
    }
  }
  const int restarts = resolve_restarts(config);
  std::vector<int> trial_counts;
  trial_counts.reserve(dims.size());
  for (const int d : dims) trial_counts.push_back(resolve_trials(config, d));

  const std::string path = csv_path_or(config, "injnorm_sweep.csv");
  std::ofstream csv = open_csv(path);
  csv << "# command=injnorm-sweep p=" << config.p
      << " field=" << field_name(config.field) << " seed=" << config.seed
      << '\n';
  if (config.p <= 2) {
    csv << "# method=exact\n";
  } else {
    OptimizerConfig opt;
    opt.restarts = restarts;
    write_optimizer_metadata(csv, opt);
  }
  csv << "# d_values=" << join_ints(dims) << " trials=" << join_ints(trial_counts)
      << '\n';
  csv << kRunRecordHeader << '\n';

  std::vector<double> mean_x;
  std::vector<double> mean_y;
  for (std::size_t index = 0; index < dims.size(); ++index) {
    const int d = dims[index];
    const int trials = trial_counts[index];
    double sum = 0.0;
    int successes = 0;
    for (int trial = 0; trial < trials; ++trial) {
      try {
        const RunRecord record =
            config.field == Field::real
                ? sweep_trial<double>(config, d, trial, restarts)
                : sweep_trial<std::complex<double>>(config, d, trial, restarts);
        write_run_record(csv, record);
        sum += record.normalized;
        ++successes;
      } catch (const std::exception& err) {
        csv << "# error d=" << d << " trial=" << trial << " what=" << err.what()
            << '\n';
        log << "error: d=" << d << " trial=" << trial << ": " << err.what()
            << '\n';
      }
    }
    if (successes > 0) {
      const double mean = sum / successes;
      mean_x.push_back(static_cast<double>(d));
      mean_y.push_back(mean);
      log << "d=" << d << " trials=" << successes
          << " mean_normalized=" << mean << '\n';
    } else {
      log << "d=" << d << " all trials failed\n";
    }
  }
  if (!csv) throw std::runtime_error("failed while writing " + path);
  log << "wrote " << path << '\n';

  if (!config.plot_svg.empty()) {
    SvgPlot plot;
    plot.title = "Injective norm sweep (p=" + std::to_string(config.p) +
                 ", " + field_name(config.field) + ")";
    plot.x_label = "d";
    plot.y_label = "estimate / sqrt(d - p)";
    SvgSeries means;
    means.x = mean_x;
    means.y = mean_y;
    means.label = "mean over trials";
    plot.series.push_back(std::move(means));
    if (config.p >= 2) {
      SvgHLine bound;
      bound.y = alpha_p(config.p);
      bound.label = "alpha(" + std::to_string(config.p) + ")";
      plot.hlines.push_back(std::move(bound));
    }
    save_svg(plot, config.plot_svg);
    log << "wrote " << config.plot_svg << '\n';
  }
}

// ============================================================================
// Order-3 ratio figure
// ============================================================================

void run_ratio_figure(const ExperimentConfig& config, std::ostream& log) {
  if (config.p != 3) {
    throw std::invalid_argument("ratio-figure requires p = 3, got p=" +
                                std::to_string(config.p));
  }
  if (config.field != Field::real) {
    throw std::invalid_argument(
        "ratio-figure compares real ensembles; field must be real");
  }
  const std::vector<int> dims =
      dims_or(config, std::vector<int>{20, 40, 60, 80, 100, 120});
  for (const int d : dims) {
    if (d <= 3) {
      throw std::invalid_argument("ratio-figure requires d > 3, got d=" +
                                  std::to_string(d));
    }
  }
  const int trials = config.trials > 0 ? config.trials : 20;
  const int restarts = resolve_restarts(config);

  const std::string path = csv_path_or(config, "ratio_figure.csv");
  std::ofstream csv = open_csv(path);
  csv << "# command=ratio-figure p=3 field=real seed=" << config.seed
      << " trials=" << trials << '\n';
  {
    OptimizerConfig opt;
    opt.restarts = restarts;
    write_optimizer_metadata(csv, opt);
  }
  {
    const PowerIterConfig baseline;
    csv << "# baselines: restarts=" << baseline.restarts
        << " max_iters=" << baseline.max_iters << " tol=" << baseline.tol
        << '\n';
  }
  csv << "# d_values=" << join_ints(dims) << '\n';
  csv << "d,trial,skew,asym,sym,skew_over_asym,skew_over_sym\n";
  set_full_precision(csv);

  std::vector<double> xs;
  std::vector<double> skew_scaled;
  std::vector<double> asym_scaled;
  std::vector<double> sym_scaled;
  for (const int d : dims) {
    double skew_sum = 0.0;
    double asym_sum = 0.0;
    double sym_sum = 0.0;
    int successes = 0;
    for (int trial = 0; trial < trials; ++trial) {
      try {
        const std::uint64_t stream = trial_stream(config.seed, d, trial);
        const auto tensor = sample_gaussian<double>(d, 3, derive_stream(stream, 0));
        OptimizerConfig opt;
        opt.restarts = restarts;
        opt.rng_seed = derive_stream(stream, 1);
        const double skew = injnorm_estimate(tensor, opt).best_value;

        SplitMix64 asym_rng(derive_stream(stream, 2));
        const auto dense = sample_tensor3(d, asym_rng);
        PowerIterConfig asym_config;
        asym_config.rng_seed = derive_stream(stream, 3);
        const double asym = injnorm_asym3(dense, d, asym_config).best_value;

        SplitMix64 sym_rng(derive_stream(stream, 4));
        const auto symmetric = sample_symmetric_tensor3(d, sym_rng);
        PowerIterConfig sym_config;
        sym_config.rng_seed = derive_stream(stream, 5);
        const double sym = injnorm_sym3(symmetric, d, sym_config).best_value;

        csv << d << ',' << trial << ',' << skew << ',' << asym << ',' << sym
            << ',' << skew / asym << ',' << skew / sym << '\n';
        skew_sum += skew;
        asym_sum += asym;
        sym_sum += sym;
        ++successes;
      } catch (const std::exception& err) {
        csv << "# error d=" << d << " trial=" << trial << " what=" << err.what()
            << '\n';
        log << "error: d=" << d << " trial=" << trial << ": " << err.what()
            << '\n';
      }
    }
    if (successes > 0) {
      xs.push_back(static_cast<double>(d));
      skew_scaled.push_back(skew_sum / successes / std::sqrt(d - 3.0));
      asym_scaled.push_back(asym_sum / successes / std::sqrt(double(d)));
      sym_scaled.push_back(sym_sum / successes / std::sqrt(double(d)));
      log << "d=" << d << " trials=" << successes
          << " mean_skew=" << skew_sum / successes
          << " mean_asym=" << asym_sum / successes
          << " mean_sym=" << sym_sum / successes << '\n';
    } else {
      log << "d=" << d << " all trials failed\n";
    }
  }
  if (!csv) throw std::runtime_error("failed while writing " + path);
  log << "wrote " << path << '\n';

  if (!config.plot_svg.empty()) {
    SvgPlot plot;
    plot.title = "Order-3 Gaussian tensors: scaled injective norms";
    plot.x_label = "d";
    plot.y_label = "scaled mean estimate";
    SvgSeries skew_series;
    skew_series.x = xs;
    skew_series.y = skew_scaled;
    skew_series.label = "antisymmetric / sqrt(d-3)";
    plot.series.push_back(std::move(skew_series));
    SvgSeries asym_series;
    asym_series.x = xs;
    asym_series.y = asym_scaled;
    asym_series.label = "asymmetric / sqrt(d)";
    asym_series.color = kColorOrange;
    plot.series.push_back(std::move(asym_series));
    SvgSeries sym_series;
    sym_series.x = xs;
    sym_series.y = sym_scaled;
    sym_series.label = "symmetric / sqrt(d)";
    sym_series.color = kColorGreen;
    plot.series.push_back(std::move(sym_series));
    save_svg(plot, config.plot_svg);
    log << "wrote " << config.plot_svg << '\n';
  }
}

// ============================================================================
// Bound tables
// ============================================================================

void run_bounds(const ExperimentConfig& config, std::ostream& log) {
  std::string stem = csv_path_or(config, "bounds");
  constexpr const char* kSuffix = ".csv";
  const std::size_t suffix_len = std::string(kSuffix).size();
  if (stem.size() > suffix_len &&
      stem.compare(stem.size() - suffix_len, suffix_len, kSuffix) == 0) {
    stem.erase(stem.size() - suffix_len);
  }

  const BoundTable alpha_table = bound_table_alpha(2, std::max(4, config.p));
  const BoundTable beta_table = bound_table_beta();
  std::vector<double> gamma_dims;
  if (config.d_values.empty()) {
    gamma_dims = {1e2, 1e4, 1e6, 1e8};
  } else {
    gamma_dims.assign(config.d_values.begin(), config.d_values.end());
  }
  const BoundTable gamma_table = bound_table_gamma(gamma_dims, config.alpha);

  const std::string alpha_path = stem + "_alpha.csv";
  const std::string beta_path = stem + "_beta.csv";
  const std::string gamma_path = stem + "_gamma.csv";
  save_csv(alpha_table, alpha_path);
  save_csv(beta_table, beta_path);
  save_csv(gamma_table, gamma_path);

  for (const auto& row : alpha_table.rows) {
    log << "p=" << static_cast<int>(row[0]) << " E0=" << row[1]
        << " alpha=" << row[2] << '\n';
  }
  for (const auto& row : gamma_table.rows) {
    log << "d=" << row[0] << " alpha=" << row[1] << " gamma=" << row[2]
        << " expansion=" << row[3] << '\n';
  }
  log << "wrote " << alpha_path << '\n';
  log << "wrote " << beta_path << '\n';
  log << "wrote " << gamma_path << '\n';

  if (!config.plot_svg.empty()) {
    SvgPlot plot;
    plot.title = "Exponent beta(alpha)";
    plot.x_label = "alpha";
    plot.y_label = "beta";
    SvgSeries curve;
    curve.x.reserve(beta_table.rows.size());
    curve.y.reserve(beta_table.rows.size());
    for (const auto& row : beta_table.rows) {
      curve.x.push_back(row[0]);
      curve.y.push_back(row[1]);
    }
    curve.label = "beta(alpha)";
    curve.draw_markers = false;
    plot.series.push_back(std::move(curve));
    save_svg(plot, config.plot_svg);
    log << "wrote " << config.plot_svg << '\n';
  }
}

// ============================================================================
// Spectral histogram
// ============================================================================

void run_spectra(const ExperimentConfig& config, std::ostream& log) {
  const int p = config.p;
  if (p < 2) {
    throw std::invalid_argument("spectra requires p >= 2, got p=" +
                                std::to_string(p));
  }
  const std::vector<int> dims = dims_or(config, std::vector<int>{p + 500});
  const int d = dims.front();
  if (dims.size() > 1) {
    log << "spectra uses a single dimension; using d=" << d << '\n';
  }
  if (d <= p) {
    throw std::invalid_argument("spectra requires d > p, got d=" +
                                std::to_string(d) +
                                " p=" + std::to_string(p));
  }
  const int m = d - p;
  const int trials = config.trials > 0 ? config.trials : 100;
  const double sigma_sq = config.field == Field::real
                              ? 1.0 / (static_cast<double>(p) * m)
                              : 1.0 / (2.0 * p * m);

  std::vector<double> pooled;
  pooled.reserve(static_cast<std::size_t>(trials) * m);
  double max_abs = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t stream = trial_stream(config.seed, d, trial);
    const EnsembleMatrix matrix =
        config.field == Field::real
            ? sample_bhgae(m, p, sigma_sq, derive_stream(stream, 0))
            : sample_cbhgae(m, p, sigma_sq, derive_stream(stream, 0));
    const Eigen::VectorXd eigenvalues = spectrum(matrix);
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
      pooled.push_back(eigenvalues[i]);
      max_abs = std::max(max_abs, std::abs(eigenvalues[i]));
    }
  }

  const std::string path = csv_path_or(config, "spectra.csv");
  std::ofstream csv = open_csv(path);
  csv << "# command=spectra p=" << p << " field=" << field_name(config.field)
      << " seed=" << config.seed << " d=" << d << " m=" << m
      << " sigma_sq=" << sigma_sq << " trials=" << trials << '\n';
  csv << "# bins=" << kSpectralBins << " range=[" << kSpectralLo << ','
      << kSpectralHi << "]\n";
  csv << "bin_lo,bin_hi,emp_density,theory_density\n";
  set_full_precision(csv);

  const double width = (kSpectralHi - kSpectralLo) / kSpectralBins;
  std::vector<double> counts(kSpectralBins, 0.0);
  for (const double value : pooled) {
    const int bin = static_cast<int>(std::floor((value - kSpectralLo) / width));
    if (bin >= 0 && bin < kSpectralBins) counts[static_cast<std::size_t>(bin)] += 1.0;
  }
  std::vector<double> centers(kSpectralBins, 0.0);
  std::vector<double> empirical(kSpectralBins, 0.0);
  std::vector<double> theory(kSpectralBins, 0.0);
  const double total = static_cast<double>(pooled.size());
  for (int b = 0; b < kSpectralBins; ++b) {
    const double lo = kSpectralLo + b * width;
    const double hi = lo + width;
    const auto index = static_cast<std::size_t>(b);
    centers[index] = lo + 0.5 * width;
    empirical[index] = counts[index] / (total * width);
    theory[index] = rho_p(centers[index], p);
    csv << lo << ',' << hi << ',' << empirical[index] << ',' << theory[index]
        << '\n';
  }
  if (!csv) throw std::runtime_error("failed while writing " + path);

  const double distance = spectral_distance(pooled, p);
  const double edge = 2.0 * std::sqrt((p - 1.0) / p);
  log << "pooled_eigenvalues=" << pooled.size() << " l1_distance=" << distance
      << " max_abs_eigenvalue=" << max_abs << " support_edge=" << edge << '\n';
  log << "wrote " << path << '\n';

  if (!config.plot_svg.empty()) {
    SvgPlot plot;
    plot.title = "Block ensemble spectrum (p=" + std::to_string(p) +
                 ", m=" + std::to_string(m) + ")";
    plot.x_label = "eigenvalue";
    plot.y_label = "density";
    SvgSeries empirical_series;
    empirical_series.x = centers;
    empirical_series.y = empirical;
    empirical_series.label = "empirical";
    empirical_series.draw_line = false;
    plot.series.push_back(std::move(empirical_series));
    SvgSeries theory_series;
    theory_series.x = centers;
    theory_series.y = theory;
    theory_series.label = "limit density";
    theory_series.color = kColorOrange;
    theory_series.draw_markers = false;
    plot.series.push_back(std::move(theory_series));
    save_svg(plot, config.plot_svg);
    log << "wrote " << config.plot_svg << '\n';
  }
}

// ============================================================================
// Duality comparison
// ============================================================================

void run_duality(const ExperimentConfig& config, std::ostream& log) {
  const std::vector<int> dims = dims_or(config, std::vector<int>{6});
  const int d = dims.front();
  if (dims.size() > 1) {
    log << "duality uses a single dimension; using d=" << d << '\n';
  }
  if (config.p < 2 || d - config.p < 2) {
    throw std::invalid_argument(
        "duality requires p >= 2 and d - p >= 2, got d=" + std::to_string(d) +
        " p=" + std::to_string(config.p));
  }
  const int trials = config.trials > 0 ? config.trials : 50;
  const int restarts = resolve_restarts(config);

  const std::string path = csv_path_or(config, "duality.csv");
  std::ofstream csv = open_csv(path);
  csv << "# command=duality p=" << config.p
      << " field=" << field_name(config.field) << " seed=" << config.seed
      << " d=" << d << " trials=" << trials << '\n';
  {
    OptimizerConfig opt;
    opt.restarts = restarts;
    write_optimizer_metadata(csv, opt);
  }
  csv << "trial,inj_t,inj_dual,relative_gap,gme_t,gme_dual\n";
  set_full_precision(csv);

  std::vector<double> gaps;
  double max_gme_diff = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    try {
      const DualityTrial result =
          config.field == Field::real
              ? duality_trial<double>(config, d, trial, restarts)
              : duality_trial<std::complex<double>>(config, d, trial, restarts);
      csv << trial << ',' << result.inj_t << ',' << result.inj_dual << ','
          << result.relative_gap << ',' << result.gme_t << ','
          << result.gme_dual << '\n';
      gaps.push_back(result.relative_gap);
      max_gme_diff =
          std::max(max_gme_diff, std::abs(result.gme_t - result.gme_dual));
    } catch (const std::exception& err) {
      csv << "# error d=" << d << " trial=" << trial << " what=" << err.what()
          << '\n';
      log << "error: d=" << d << " trial=" << trial << ": " << err.what()
          << '\n';
    }
  }
  if (!csv) throw std::runtime_error("failed while writing " + path);
  if (!gaps.empty()) {
    log << "trials=" << gaps.size() << " gap_q25=" << quantile(gaps, 0.25)
        << " gap_median=" << quantile(gaps, 0.5)
        << " gap_q75=" << quantile(gaps, 0.75)
        << " gap_max=" << quantile(gaps, 1.0)
        << " max_gme_diff=" << max_gme_diff << '\n';
  } else {
    log << "all trials failed\n";
  }
  log << "wrote " << path << '\n';
}

// ============================================================================
// Tensor sampling
// ============================================================================

void run_sample_tensor(const ExperimentConfig& config, std::ostream& log) {
  const std::vector<int> dims = dims_or(config, std::vector<int>{6});
  const int d = dims.front();
  if (dims.size() > 1) {
    log << "sample-tensor uses a single dimension; using d=" << d << '\n';
  }
  const std::string path = csv_path_or(config, "tensor.csv");
  const std::uint64_t stream = trial_stream(config.seed, d, 0);
  Eigen::Index coefficients = 0;
  if (config.field == Field::real) {
    const auto tensor =
        sample_gaussian<double>(d, config.p, derive_stream(stream, 0));
    save_tensor(tensor, path);
    coefficients = tensor.coeffs.size();
  } else {
    const auto tensor = sample_gaussian<std::complex<double>>(
        d, config.p, derive_stream(stream, 0));
    save_tensor(tensor, path);
    coefficients = tensor.coeffs.size();
  }
  log << "wrote d=" << d << " p=" << config.p << " field="
      << field_name(config.field) << " tensor (" << coefficients
      << " coefficients) to " << path << '\n';
}

}  // namespace wedge
