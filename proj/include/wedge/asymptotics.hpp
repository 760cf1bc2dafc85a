// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/** @file
 *  @brief Closed-form bound functions for Gaussian antisymmetric tensors:
 *         the semicircle log-potential, the annealed rate function and its
 *         root, double-scaling constants, Grassmannian volumes, and
 *         Hilbert-Schmidt mean asymptotics.
 *
 *  Everything here is a pure scalar function (plus small table builders),
 *  evaluated in log scale where magnitudes would otherwise overflow.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/antisym_tensor.hpp"

namespace wedge {

// ============================================================================
// Semicircle log-potential
// ============================================================================

/**
 * @brief Log-potential of the radius-2 semicircle law,
 *        Omega(u) = Integral of log|u - x| against (1/2pi) sqrt((4 - x^2)+).
 *
 * Closed form: u^2/4 - 1/2 inside the support; outside,
 * u^2/4 - 1/2 - |u| sqrt(u^2-4)/4 + log((|u| + sqrt(u^2-4))/2).
 * Continuous at |u| = 2 and asymptotic to log|u| as |u| grows.
 */
[[nodiscard]] inline double omega(double u) {
  const double a = std::abs(u);
  if (a <= 2.0) {
    return 0.25 * u * u - 0.5;
  }
  const double s = std::sqrt(a * a - 4.0);
  return 0.25 * u * u - 0.5 - 0.25 * a * s + std::log(0.5 * (a + s));
}

/**
 * @brief Derivative of omega: u/2 inside the support,
 *        sign(u) (|u| - sqrt(u^2-4))/2 outside.
 *
 * The one-sided limits at |u| = 2 agree, so omega is differentiable there.
 */
[[nodiscard]] inline double omega_derivative(double u) {
  const double a = std::abs(u);
  const double sign = (u < 0.0) ? -1.0 : 1.0;
  if (a <= 2.0) {
    return 0.5 * u;
  }
  const double s = std::sqrt(a * a - 4.0);
  return sign * 0.5 * (a - s);
}

/**
 * @brief Quadrature oracle for omega using Gauss-Chebyshev (second kind)
 *        nodes; substituting x = 2 cos(theta) gives
 *        (2/(n+1)) sum_k sin^2(theta_k) log|u - 2 cos(theta_k)|.
 *
 * Used to cross-validate the closed form. Accuracy is excellent away from
 * the support and limited by the logarithmic singularity inside it.
 *
 * @throws std::invalid_argument if nodes < 1.
 */
[[nodiscard]] inline double omega_quadrature(double u, int nodes = 10000) {
  if (nodes < 1) {
    throw std::invalid_argument("omega_quadrature: requires nodes >= 1, got " +
                                std::to_string(nodes));
  }
  const double n1 = static_cast<double>(nodes) + 1.0;
  double sum = 0.0;
  for (int k = 1; k <= nodes; ++k) {
    const double theta = M_PI * static_cast<double>(k) / n1;
    const double sin_theta = std::sin(theta);
    const double gap = std::abs(u - 2.0 * std::cos(theta));
    if (gap > 0.0) {
      sum += sin_theta * sin_theta * std::log(gap);
    }
  }
  return 2.0 * sum / n1;
}

// ============================================================================
// Annealed rate function and bound constants
// ============================================================================

/**
 * @brief Rate function
 *        sigma_p(u) = (1 + log p)/2 - u^2/2 + omega(u sqrt(p/(p-1)))
 *                     + (1/2) log((p-1)/p),
 *        i.e. the log-potential term is taken for the semicircle of radius
 *        2 sqrt((p-1)/p).
 *
 * Non-increasing in u >= 0; strictly decreasing for p >= 3. For p = 2 it
 * vanishes identically on [0, sqrt(2)] and decreases strictly afterwards.
 *
 * @throws std::invalid_argument if p < 2.
 */
[[nodiscard]] inline double sigma_p(double u, int p) {
  if (p < 2) {
    throw std::invalid_argument("sigma_p: requires p >= 2, got p=" +
                                std::to_string(p));
  }
  const double pr = static_cast<double>(p);
  const double ratio = (pr - 1.0) / pr;
  return 0.5 * (1.0 + std::log(pr)) - 0.5 * u * u +
         omega(u / std::sqrt(ratio)) + 0.5 * std::log(ratio);
}

/**
 * @brief Largest zero of sigma_p on (0, 10], located by bisection to
 *        absolute tolerance 1e-10.
 *
 * Values within 1e-13 of zero count as the non-negative side of the
 * bracket, so the flat stretch of sigma_2 cannot deflect the root below
 * sqrt(2).
 *
 * @throws std::invalid_argument if p < 2.
 */
[[nodiscard]] inline double e0(int p) {
  constexpr double kPlateauTol = 1e-13;
  double lo = 0.0;
  double hi = 10.0;
  if (sigma_p(hi, p) >= -kPlateauTol) {
    throw std::runtime_error("e0: no sign change on (0, 10] for p=" +
                             std::to_string(p));
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (sigma_p(mid, p) >= -kPlateauTol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/**
 * @brief Normalized large-d bound constant alpha(p) = sqrt(p) e0(p).
 *
 * alpha(2) = 2, alpha(3) ~ 2.870, alpha(4) ~ 3.588.
 *
 * @throws std::invalid_argument if p < 2.
 */
[[nodiscard]] inline double alpha_p(int p) {
  return std::sqrt(static_cast<double>(p)) * e0(p);
}

// ============================================================================
// Double-scaling constants
// ============================================================================

/**
 * @brief Double-scaling volume constant
 *        beta(a) = 3/4 + (a/(4(1-a))) log a + ((1-a)/(4a)) log(1-a)
 *                  + (1/2) log(a(1-a)).
 *
 * Symmetric under a -> 1-a; diverges to -infinity at both endpoints.
 *
 * @throws std::invalid_argument unless 0 < a < 1.
 */
[[nodiscard]] inline double beta(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "beta: requires 0 < alpha < 1, got alpha=" << alpha;
    throw std::invalid_argument(msg.str());
  }
  const double om = 1.0 - alpha;
  return 0.75 + 0.25 * (alpha / om) * std::log(alpha) +
         0.25 * (om / alpha) * std::log(om) + 0.5 * std::log(alpha * om);
}

/**
 * @brief Root gamma of (1/2) log d + beta(alpha) + omega(gamma) - gamma^2/2
 *        = 0, located by bisection to absolute tolerance 1e-10.
 *
 * The left side is strictly decreasing in gamma >= 0 with maximum
 * (1/2) log d + beta(alpha) - 1/2 at gamma = 0, so a (unique) root exists
 * exactly when that maximum is non-negative. The bracket starts on the
 * interior branch of omega, so roots below 2 are found as well.
 *
 * @throws std::invalid_argument if d < 3 or alpha outside (0, 1).
 * @throws std::runtime_error with diagnostics when no root exists.
 */
[[nodiscard]] inline double gamma_alpha(double d, double alpha) {
  if (!(d >= 3.0)) {
    std::ostringstream msg;
    msg << "gamma_alpha: requires d >= 3, got d=" << d;
    throw std::invalid_argument(msg.str());
  }
  const double level = 0.5 * std::log(d) + beta(alpha);
  if (level - 0.5 < 0.0) {
    std::ostringstream msg;
    msg << "gamma_alpha: no root: 0.5*log(d) + beta(alpha) = " << level
        << " is below the minimum level 0.5 (d=" << d << ", alpha=" << alpha
        << ")";
    throw std::runtime_error(msg.str());
  }
  const auto height = [level](double g) { return level + omega(g) - 0.5 * g * g; };
  double lo = 0.0;
  double hi = 4.0;
  while (height(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (height(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/**
 * @brief Large-d expansion of gamma_alpha:
 *        sqrt(log d) + log log d / (2 sqrt(log d)) + beta(alpha)/sqrt(log d).
 *
 * The residual against the exact root shrinks faster than 1/sqrt(log d).
 *
 * @throws std::invalid_argument if d < 3 or alpha outside (0, 1).
 */
[[nodiscard]] inline double gamma_expansion(double d, double alpha) {
  if (!(d >= 3.0)) {
    std::ostringstream msg;
    msg << "gamma_expansion: requires d >= 3, got d=" << d;
    throw std::invalid_argument(msg.str());
  }
  const double b = beta(alpha);
  const double ld = std::log(d);
  const double root = std::sqrt(ld);
  return root + std::log(ld) / (2.0 * root) + b / root;
}

// ============================================================================
// Log-volumes and landscape constants
// ============================================================================

/**
 * @brief Log-volume of the Grassmannian of p-planes in d-space.
 *
 * Real:    pi^(p(d-p)/2) prod_{i=1..d-p} Gamma(i/2) / prod_{i=p+1..d} Gamma(i/2).
 * Complex: pi^(p(d-p))   prod_{i=1..d-p} Gamma(i)   / prod_{i=p+1..d} Gamma(i).
 *
 * Evaluated via lgamma as a sum of pairwise differences
 * lgamma(s i) - lgamma(s (p+i)), which stays well-conditioned and
 * overflow-free up to d = 1e6.
 *
 * @throws std::invalid_argument unless 1 <= p <= d-1.
 */
[[nodiscard]] inline double log_vol_grassmann(int p, int d, Field field) {
  if (p < 1 || p > d - 1) {
    throw std::invalid_argument(
        "log_vol_grassmann: requires 1 <= p <= d-1, got p=" +
        std::to_string(p) + ", d=" + std::to_string(d));
  }
  const double scale = (field == Field::real) ? 0.5 : 1.0;
  double sum = 0.0;
  for (int i = 1; i <= d - p; ++i) {
    sum += std::lgamma(scale * i) - std::lgamma(scale * (p + i));
  }
  const double pdp = static_cast<double>(p) * (d - p);
  return scale * pdp * std::log(M_PI) + sum;
}

/**
 * @brief Log of the real landscape constant
 *        K(p,d) = Vol(Gr_R(p,d)) (sqrt(p(d-p)/(2 pi)))^(p(d-p)+1).
 *
 * Normalized by p(d-p), log K tends to (1 + log p)/2 at fixed p as d grows.
 *
 * @throws std::invalid_argument unless 1 <= p <= d-1.
 */
[[nodiscard]] inline double log_k(int p, int d) {
  const double vol = log_vol_grassmann(p, d, Field::real);
  const double pdp = static_cast<double>(p) * (d - p);
  return vol + 0.5 * (pdp + 1.0) * std::log(pdp / (2.0 * M_PI));
}

/**
 * @brief Log of the complex landscape constant
 *        L(p,d) = Vol(Gr_C(p,d)) (p(d-p)/(2 pi))^(p(d-p)+1).
 *
 * Normalized by 2p(d-p), log L tends to (1 + log p - log 2)/2 at fixed p:
 * the gamma-duplication identity leaves log L = 2 log K - p(d-p) log 2
 * up to lower-order terms, shifting the real-case limit by -(log 2)/2.
 *
 * @throws std::invalid_argument unless 1 <= p <= d-1.
 */
[[nodiscard]] inline double log_l(int p, int d) {
  const double vol = log_vol_grassmann(p, d, Field::complex);
  const double pdp = static_cast<double>(p) * (d - p);
  return vol + (pdp + 1.0) * std::log(pdp / (2.0 * M_PI));
}

// ============================================================================
// Hilbert-Schmidt mean asymptotics
// ============================================================================

/// Growth regime for the mean squared Hilbert-Schmidt norm.
enum class AsymptoticRegime {
  fixed_order,     ///< p held fixed while d grows.
  double_scaling,  ///< p = alpha d with alpha in (0, 1).
};

/**
 * @brief Exact log of the mean squared Hilbert-Schmidt norm of a Gaussian
 *        antisymmetric tensor: log(d!/(d-p)!).
 *
 * @throws std::invalid_argument unless 0 <= p <= d.
 */
[[nodiscard]] inline double log_hs_mean_exact(int d, int p) {
  if (p < 0 || p > d) {
    throw std::invalid_argument("log_hs_mean_exact: requires 0 <= p <= d, got p=" +
                                std::to_string(p) + ", d=" + std::to_string(d));
  }
  return std::lgamma(static_cast<double>(d) + 1.0) -
         std::lgamma(static_cast<double>(d - p) + 1.0);
}

/**
 * @brief Log-scale asymptotic mean squared Hilbert-Schmidt norm.
 *
 * Fixed order: d^p, so p log d in log scale (exact for p = 1).
 * Double scaling with p = alpha d:
 * d^(alpha d) exp(-(alpha + (1-alpha) log(1-alpha)) d).
 *
 * @param d           ambient dimension (d > 1).
 * @param p_or_alpha  the order p (fixed_order) or the ratio alpha in (0, 1)
 *                    (double_scaling).
 * @throws std::invalid_argument on out-of-range arguments.
 */
[[nodiscard]] inline double hs_mean_asymptotics(double d, double p_or_alpha,
                                                AsymptoticRegime regime) {
  if (!(d > 1.0)) {
    std::ostringstream msg;
    msg << "hs_mean_asymptotics: requires d > 1, got d=" << d;
    throw std::invalid_argument(msg.str());
  }
  if (regime == AsymptoticRegime::fixed_order) {
    if (!(p_or_alpha >= 0.0)) {
      std::ostringstream msg;
      msg << "hs_mean_asymptotics: requires p >= 0, got p=" << p_or_alpha;
      throw std::invalid_argument(msg.str());
    }
    return p_or_alpha * std::log(d);
  }
  const double alpha = p_or_alpha;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "hs_mean_asymptotics: requires 0 < alpha < 1, got alpha=" << alpha;
    throw std::invalid_argument(msg.str());
  }
  return alpha * d * std::log(d) -
         (alpha + (1.0 - alpha) * std::log1p(-alpha)) * d;
}

// ============================================================================
// Bound tables
// ============================================================================

/// A small numeric table with named columns, serializable as CSV.
struct BoundTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/**
 * @brief Table of (p, E0, alpha) for p in [p_min, p_max].
 *
 * @throws std::invalid_argument if p_min < 2 or p_max < p_min.
 */
[[nodiscard]] inline BoundTable bound_table_alpha(int p_min, int p_max) {
  if (p_min < 2 || p_max < p_min) {
    throw std::invalid_argument(
        "bound_table_alpha: requires 2 <= p_min <= p_max, got p_min=" +
        std::to_string(p_min) + ", p_max=" + std::to_string(p_max));
  }
  BoundTable table;
  table.columns = {"p", "E0", "alpha"};
  for (int p = p_min; p <= p_max; ++p) {
    const double root = e0(p);
    table.rows.push_back(
        {static_cast<double>(p), root, std::sqrt(static_cast<double>(p)) * root});
  }
  return table;
}

/**
 * @brief Table of (alpha, beta, beta_mirror) on a uniform grid, where
 *        beta_mirror = beta(1 - alpha) witnesses the symmetry.
 *
 * @throws std::invalid_argument if n_points < 2 or the grid leaves (0, 1).
 */
[[nodiscard]] inline BoundTable bound_table_beta(int n_points = 99,
                                                 double alpha_min = 0.01,
                                                 double alpha_max = 0.99) {
  if (n_points < 2 || !(alpha_min > 0.0) || !(alpha_max < 1.0) ||
      !(alpha_min < alpha_max)) {
    std::ostringstream msg;
    msg << "bound_table_beta: requires n_points >= 2 and 0 < alpha_min < "
           "alpha_max < 1, got n_points="
        << n_points << ", alpha_min=" << alpha_min
        << ", alpha_max=" << alpha_max;
    throw std::invalid_argument(msg.str());
  }
  BoundTable table;
  table.columns = {"alpha", "beta", "beta_mirror"};
  const double step = (alpha_max - alpha_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double a = alpha_min + step * i;
    table.rows.push_back({a, beta(a), beta(1.0 - a)});
  }
  return table;
}

/**
 * @brief Table of (d, alpha, gamma, gamma_expansion) for the given
 *        dimensions at a fixed ratio alpha.
 *
 * @throws std::invalid_argument if d_values is empty (and the per-entry
 *         validation of gamma_alpha applies to each row).
 */
[[nodiscard]] inline BoundTable bound_table_gamma(
    const std::vector<double>& d_values, double alpha) {
  if (d_values.empty()) {
    throw std::invalid_argument("bound_table_gamma: requires at least one d");
  }
  BoundTable table;
  table.columns = {"d", "alpha", "gamma", "gamma_expansion"};
  for (const double d : d_values) {
    table.rows.push_back({d, alpha, gamma_alpha(d, alpha), gamma_expansion(d, alpha)});
  }
  return table;
}

/// Writes a bound table as CSV (header row, then full-precision values).
inline void write_csv(const BoundTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i == 0 ? "" : ",") << table.columns[i];
  }
  out << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i == 0 ? "" : ",") << row[i];
    }
    out << '\n';
  }
}

/**
 * @brief Writes a bound table to a CSV file.
 *
 * @throws std::runtime_error if the file cannot be opened or written.
 */
inline void save_csv(const BoundTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_csv: cannot open " + path);
  }
  write_csv(table, out);
  if (!out.good()) {
    throw std::runtime_error("save_csv: write failed for " + path);
  }
}

}  // namespace wedge
