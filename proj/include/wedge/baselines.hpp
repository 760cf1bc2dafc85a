// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Order-3 baseline maximizers: injective norms of dense asymmetric
 *         and symmetric Gaussian tensors, for comparison curves against the
 *         antisymmetric case.
 *
 *  Tensors are stored flat in column-major order, entry (i, j, k) at index
 *  i + d j + d^2 k. The asymmetric maximizer is alternating power iteration
 *  over unit-sphere triples (block coordinate ascent, monotone by
 *  construction); the symmetric maximizer is projected gradient ascent over
 *  a single unit vector with Armijo backtracking.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/rng.hpp"

namespace wedge {

// ============================================================================
// Sampling
// ============================================================================

/**
 * @brief Dense order-3 tensor with i.i.d. standard normal entries.
 *
 * @throws std::invalid_argument if d < 1.
 */
[[nodiscard]] inline std::vector<double> sample_tensor3(int d, SplitMix64& rng) {
  if (d < 1) {
    throw std::invalid_argument("sample_tensor3: requires d >= 1, got d=" +
                                std::to_string(d));
  }
  std::vector<double> tensor(static_cast<std::size_t>(d) * d * d);
  for (auto& value : tensor) {
    value = rng.normal();
  }
  return tensor;
}

/**
 * @brief Symmetric order-3 tensor: one standard normal per multiset
 *        i <= j <= k, copied to every index permutation.
 *
 * @throws std::invalid_argument if d < 1.
 */
[[nodiscard]] inline std::vector<double> sample_symmetric_tensor3(int d,
                                                                  SplitMix64& rng) {
  if (d < 1) {
    throw std::invalid_argument(
        "sample_symmetric_tensor3: requires d >= 1, got d=" + std::to_string(d));
  }
  const auto at = [d](int i, int j, int k) {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(d) * j +
           static_cast<std::size_t>(d) * d * k;
  };
  std::vector<double> tensor(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int k = j; k < d; ++k) {
        const double value = rng.normal();
        tensor[at(i, j, k)] = value;
        tensor[at(i, k, j)] = value;
        tensor[at(j, i, k)] = value;
        tensor[at(j, k, i)] = value;
        tensor[at(k, i, j)] = value;
        tensor[at(k, j, i)] = value;
      }
    }
  }
  return tensor;
}

// ============================================================================
// Configuration and result
// ============================================================================

/// Settings for the order-3 baseline maximizers.
struct PowerIterConfig {
  int restarts = 5;              ///< Independent random initializations.
  int max_iters = 500;           ///< Iteration cap per restart.
  double tol = 1e-10;            ///< Relative objective-change stopping tolerance.
  std::uint64_t rng_seed = 0;    ///< Base seed; restarts use derived streams.
  bool record_trace = false;     ///< Keep per-iteration objective values.
};

/// Outcome of a multi-start order-3 maximization.
struct Baseline3Result {
  double best_value = 0.0;                  ///< Largest objective found.
  Eigen::VectorXd best_x;                   ///< Attaining unit vectors; for the
  Eigen::VectorXd best_y;                   ///< symmetric maximizer all three
  Eigen::VectorXd best_z;                   ///< coincide.
  std::vector<double> restart_values;      ///< Final objective per restart.
  std::vector<std::vector<double>> traces;  ///< Per-iteration objectives, if recorded.
};

namespace detail {

inline void check_baseline3(const std::vector<double>& tensor, int d,
                            const PowerIterConfig& config, const char* where) {
  const std::string name(where);
  if (d < 1) {
    throw std::invalid_argument(name + ": requires d >= 1, got d=" +
                                std::to_string(d));
  }
  if (tensor.size() != static_cast<std::size_t>(d) * d * d) {
    throw std::invalid_argument(name + ": tensor has " +
                                std::to_string(tensor.size()) +
                                " entries, expected d^3=" +
                                std::to_string(static_cast<std::size_t>(d) * d * d));
  }
  if (config.restarts < 1 || config.max_iters < 1 || !(config.tol > 0.0)) {
    throw std::invalid_argument(
        name + ": requires restarts >= 1, max_iters >= 1, tol > 0");
  }
}

/// u_i = sum_{j,k} T_ijk y_j z_k.
[[nodiscard]] inline Eigen::VectorXd contract_yz(const std::vector<double>& tensor,
                                                 int d, const Eigen::VectorXd& y,
                                                 const Eigen::VectorXd& z) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
  for (int k = 0; k < d; ++k) {
    const Eigen::Map<const Eigen::MatrixXd> slice(
        tensor.data() + static_cast<std::size_t>(d) * d * k, d, d);
    u.noalias() += z[k] * (slice * y);
  }
  return u;
}

/// v_j = sum_{i,k} T_ijk x_i z_k.
[[nodiscard]] inline Eigen::VectorXd contract_xz(const std::vector<double>& tensor,
                                                 int d, const Eigen::VectorXd& x,
                                                 const Eigen::VectorXd& z) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  for (int k = 0; k < d; ++k) {
    const Eigen::Map<const Eigen::MatrixXd> slice(
        tensor.data() + static_cast<std::size_t>(d) * d * k, d, d);
    v.noalias() += z[k] * (slice.transpose() * x);
  }
  return v;
}

/// w_k = sum_{i,j} T_ijk x_i y_j.
[[nodiscard]] inline Eigen::VectorXd contract_xy(const std::vector<double>& tensor,
                                                 int d, const Eigen::VectorXd& x,
                                                 const Eigen::VectorXd& y) {
  Eigen::VectorXd w(d);
  for (int k = 0; k < d; ++k) {
    const Eigen::Map<const Eigen::MatrixXd> slice(
        tensor.data() + static_cast<std::size_t>(d) * d * k, d, d);
    w[k] = x.dot(slice * y);
  }
  return w;
}

[[nodiscard]] inline Eigen::VectorXd random_unit_vector(int d, SplitMix64& rng) {
  Eigen::VectorXd v(d);
  do {
    for (int i = 0; i < d; ++i) {
      v[i] = rng.normal();
    }
  } while (v.norm() == 0.0);
  return v / v.norm();
}

}  // namespace detail

// ============================================================================
// Asymmetric maximizer: alternating power iteration
// ============================================================================

/**
 * @brief Maximizes T(x, y, z) over unit-sphere triples by alternating power
 *        iteration: each block update replaces one vector with the
 *        normalized partial contraction, which can only increase the
 *        objective.
 *
 * Multi-start; the objective trace of every restart is non-decreasing.
 *
 * @throws std::invalid_argument on shape or configuration errors.
 */
[[nodiscard]] inline Baseline3Result injnorm_asym3(const std::vector<double>& tensor,
                                                   int d,
                                                   const PowerIterConfig& config = {}) {
  detail::check_baseline3(tensor, d, config, "injnorm_asym3");
  Baseline3Result result;
  result.best_value = -1.0;
  for (int restart = 0; restart < config.restarts; ++restart) {
    SplitMix64 rng(derive_stream(config.rng_seed, restart));
    Eigen::VectorXd x = detail::random_unit_vector(d, rng);
    Eigen::VectorXd y = detail::random_unit_vector(d, rng);
    Eigen::VectorXd z = detail::random_unit_vector(d, rng);
    std::vector<double> trace;
    double value = 0.0;
    for (int iter = 0; iter < config.max_iters; ++iter) {
      const Eigen::VectorXd u = detail::contract_yz(tensor, d, y, z);
      if (u.norm() > 0.0) {
        x = u / u.norm();
      }
      const Eigen::VectorXd v = detail::contract_xz(tensor, d, x, z);
      if (v.norm() > 0.0) {
        y = v / v.norm();
      }
      const Eigen::VectorXd w = detail::contract_xy(tensor, d, x, y);
      const double updated = w.norm();
      if (updated > 0.0) {
        z = w / updated;
      }
      if (config.record_trace) {
        trace.push_back(updated);
      }
      if (std::abs(updated - value) <= config.tol * std::max(1.0, std::abs(updated))) {
        value = updated;
        break;
      }
      value = updated;
    }
    result.restart_values.push_back(value);
    if (config.record_trace) {
      result.traces.push_back(std::move(trace));
    }
    if (value > result.best_value) {
      result.best_value = value;
      result.best_x = x;
      result.best_y = y;
      result.best_z = z;
    }
  }
  return result;
}

// ============================================================================
// Symmetric maximizer: projected gradient ascent on the sphere
// ============================================================================

/**
 * @brief Maximizes |T(x, x, x)| over unit vectors for symmetric T by
 *        projected gradient ascent with Armijo backtracking (the sign is
 *        fixed by flipping x, since the objective is odd).
 *
 * The accepted-objective trace of every restart is non-decreasing.
 *
 * @throws std::invalid_argument on shape or configuration errors.
 */
[[nodiscard]] inline Baseline3Result injnorm_sym3(const std::vector<double>& tensor,
                                                  int d,
                                                  const PowerIterConfig& config = {}) {
  detail::check_baseline3(tensor, d, config, "injnorm_sym3");
  constexpr double kArmijo = 1e-4;
  constexpr double kBacktrack = 0.5;
  constexpr double kInitialStep = 1.0;
  Baseline3Result result;
  result.best_value = -1.0;
  for (int restart = 0; restart < config.restarts; ++restart) {
    SplitMix64 rng(derive_stream(config.rng_seed, restart));
    Eigen::VectorXd x = detail::random_unit_vector(d, rng);
    double value = detail::contract_xy(tensor, d, x, x).dot(x);
    if (value < 0.0) {
      x = -x;
      value = -value;
    }
    std::vector<double> trace;
    if (config.record_trace) {
      trace.push_back(value);
    }
    double step_hint = kInitialStep;
    for (int iter = 0; iter < config.max_iters; ++iter) {
      const Eigen::VectorXd u = detail::contract_yz(tensor, d, x, x);
      const Eigen::VectorXd grad = 3.0 * (u - u.dot(x) * x);
      const double grad_sq = grad.squaredNorm();
      if (grad_sq <= 1e-24) {
        break;
      }
      double step = step_hint;
      bool accepted = false;
      while (step > 1e-14 * kInitialStep) {
        Eigen::VectorXd candidate = x + step * grad;
        candidate /= candidate.norm();
        const double cand_value =
            detail::contract_xy(tensor, d, candidate, candidate).dot(candidate);
        if (cand_value >= value + kArmijo * step * grad_sq) {
          x = candidate;
          value = cand_value;
          accepted = true;
          break;
        }
        step *= kBacktrack;
      }
      if (!accepted) {
        break;
      }
      step_hint = std::min(kInitialStep, step / kBacktrack);
      if (config.record_trace) {
        trace.push_back(value);
      }
      if (step * grad_sq <= config.tol * std::max(1.0, std::abs(value))) {
        break;
      }
    }
    result.restart_values.push_back(value);
    if (config.record_trace) {
      result.traces.push_back(std::move(trace));
    }
    if (value > result.best_value) {
      result.best_value = value;
      result.best_x = x;
      result.best_y = x;
      result.best_z = x;
    }
  }
  return result;
}

}  // namespace wedge
