// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ensembles.hpp
 * @brief Block-structured Gaussian ensembles, their spectra, the limiting
 * semicircle family rho_p with its Stieltjes transform, and Monte Carlo
 * averages of |det(u - W)|.
 *
 * Matrices are N x N real symmetric with an underlying q x q grid of m x m
 * blocks (q = p for the real ensembles, q = 2p for the complex one):
 *  - bhgoe: off-diagonal blocks filled with i.i.d. N(0, sigma^2), diagonal
 *    blocks zero, global symmetry;
 *  - bhgae: (A - A^G)/sqrt(2) from a bhgoe A, where ^G transposes each
 *    block in place; every block is skew-symmetric;
 *  - cbhgae: [[A, B], [B, -A]] with A, B independent bhgae samples.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/antisym_tensor.hpp"
#include "wedge/rng.hpp"

namespace wedge {

// =============================================================================
// Ensemble matrices
// =============================================================================

enum class EnsembleKind { bhgoe, bhgae, cbhgae };

/** @brief A sampled ensemble matrix together with its block geometry. */
struct EnsembleMatrix {
  EnsembleKind kind = EnsembleKind::bhgoe;
  int p = 0;             ///< logical block count of the real structure
  int m = 0;             ///< block size
  double sigma_sq = 0;   ///< entry variance parameter
  Eigen::MatrixXd data;  ///< N x N symmetric, N = p*m (cbhgae: 2*p*m)
};

namespace detail {

inline void check_block_shape(int m, int p) {
  if (m < 1 || p < 1) {
    throw std::invalid_argument("ensemble: need m >= 1 and p >= 1, got m=" +
                                std::to_string(m) + " p=" + std::to_string(p));
  }
}

}  // namespace detail

/**
 * @brief Symmetric N x N matrix (N = p*m) with zero diagonal blocks and
 * i.i.d. N(0, sigma_sq) entries on the off-diagonal blocks.
 */
[[nodiscard]] inline EnsembleMatrix sample_bhgoe(int m, int p, double sigma_sq,
                                                 std::uint64_t seed) {
  detail::check_block_shape(m, p);
  const int n = p * m;
  EnsembleMatrix matrix{EnsembleKind::bhgoe, p, m, sigma_sq,
                        Eigen::MatrixXd::Zero(n, n)};
  SplitMix64 gen(seed);
  const double scale = std::sqrt(sigma_sq);
  for (int bi = 0; bi < p; ++bi) {
    for (int bj = bi + 1; bj < p; ++bj) {
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          const double value = scale * gen.normal();
          matrix.data(bi * m + r, bj * m + c) = value;
          matrix.data(bj * m + c, bi * m + r) = value;
        }
      }
    }
  }
  return matrix;
}

/** @brief Partial transpose: every m x m block replaced by its transpose. */
[[nodiscard]] inline EnsembleMatrix partial_transpose(
    const EnsembleMatrix& matrix) {
  const int m = matrix.m;
  const int n = static_cast<int>(matrix.data.rows());
  const int blocks = n / m;
  EnsembleMatrix result = matrix;
  for (int bi = 0; bi < blocks; ++bi) {
    for (int bj = 0; bj < blocks; ++bj) {
      result.data.block(bi * m, bj * m, m, m) =
          matrix.data.block(bi * m, bj * m, m, m).transpose();
    }
  }
  return result;
}

/**
 * @brief Antisymmetrized ensemble (A - A^G)/sqrt(2): skew off-diagonal
 * blocks whose independent entries keep variance sigma_sq.
 */
[[nodiscard]] inline EnsembleMatrix sample_bhgae(int m, int p, double sigma_sq,
                                                 std::uint64_t seed) {
  EnsembleMatrix a = sample_bhgoe(m, p, sigma_sq, seed);
  const EnsembleMatrix a_pt = partial_transpose(a);
  a.kind = EnsembleKind::bhgae;
  a.data = (a.data - a_pt.data) / std::sqrt(2.0);
  return a;
}

/** @brief Complex-structure ensemble [[A, B], [B, -A]], N = 2*p*m. */
[[nodiscard]] inline EnsembleMatrix sample_cbhgae(int m, int p, double sigma_sq,
                                                  std::uint64_t seed) {
  detail::check_block_shape(m, p);
  const EnsembleMatrix a =
      sample_bhgae(m, p, sigma_sq, derive_stream(seed, 0));
  const EnsembleMatrix b =
      sample_bhgae(m, p, sigma_sq, derive_stream(seed, 1));
  const int n = p * m;
  EnsembleMatrix matrix{EnsembleKind::cbhgae, p, m, sigma_sq,
                        Eigen::MatrixXd(2 * n, 2 * n)};
  matrix.data.topLeftCorner(n, n) = a.data;
  matrix.data.topRightCorner(n, n) = b.data;
  matrix.data.bottomLeftCorner(n, n) = b.data;
  matrix.data.bottomRightCorner(n, n) = -a.data;
  return matrix;
}

// =============================================================================
// Spectra
// =============================================================================

/** @brief Eigenvalues in ascending order. */
[[nodiscard]] inline Eigen::VectorXd spectrum(const EnsembleMatrix& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix.data, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/** @brief Operator norm max |lambda|. */
[[nodiscard]] inline double operator_norm(const EnsembleMatrix& matrix) {
  const Eigen::VectorXd eigenvalues = spectrum(matrix);
  return std::max(std::abs(eigenvalues(0)),
                  std::abs(eigenvalues(eigenvalues.size() - 1)));
}

// =============================================================================
// Limiting density and Stieltjes transform
// =============================================================================

namespace detail {

inline void check_family_order(int p) {
  if (p < 2) {
    throw std::invalid_argument("semicircle family: requires p >= 2");
  }
}

}  // namespace detail

/**
 * @brief Limiting spectral density of the antisymmetrized ensembles:
 * a semicircle of radius 2 sqrt((p-1)/p).
 */
[[nodiscard]] inline double rho_p(double x, int p) {
  detail::check_family_order(p);
  const double r_sq = (p - 1.0) / p;
  const double inside = 4.0 * r_sq - x * x;
  if (inside <= 0.0) return 0.0;
  return p / (2.0 * M_PI * (p - 1.0)) * std::sqrt(inside);
}

/**
 * @brief Stieltjes transform of rho_p with m(z) ~ -1/z at infinity, for
 * Im z > 0 or real z outside the support.
 */
[[nodiscard]] inline std::complex<double> stieltjes_m_p(std::complex<double> z,
                                                        int p) {
  detail::check_family_order(p);
  const double r_sq = (p - 1.0) / p;
  const double edge = 2.0 * std::sqrt(r_sq);
  std::complex<double> root;
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (std::abs(x) <= edge) {
      throw std::invalid_argument(
          "stieltjes_m_p: real argument inside the support [-" +
          std::to_string(edge) + ", " + std::to_string(edge) +
          "] has no unambiguous branch");
    }
    const double sign = x > 0 ? 1.0 : -1.0;
    root = sign * std::sqrt(x * x - edge * edge);
  } else if (z.imag() > 0.0) {
    // Principal branch of sqrt(z - edge) sqrt(z + edge), holomorphic off
    // the support and asymptotic to z.
    root = std::sqrt(z - edge) * std::sqrt(z + edge);
  } else {
    throw std::invalid_argument(
        "stieltjes_m_p: argument must be real off-support or in the upper "
        "half-plane");
  }
  // Rationalized root of r_sq m^2 + z m + 1 = 0; stable for large |z|.
  return -2.0 / (z + root);
}

// =============================================================================
// Histogram distance
// =============================================================================

inline constexpr int kSpectralBins = 100;
inline constexpr double kSpectralLo = -2.5;
inline constexpr double kSpectralHi = 2.5;

/**
 * @brief L1 distance between the empirical eigenvalue density and rho_p on
 * the fixed 100-bin grid over [-2.5, 2.5]. Accepts pooled eigenvalues from
 * any number of draws.
 */
[[nodiscard]] inline double spectral_distance(
    const std::vector<double>& eigenvalues, int p) {
  detail::check_family_order(p);
  if (eigenvalues.empty()) {
    throw std::invalid_argument("spectral_distance: no eigenvalues");
  }
  const double width = (kSpectralHi - kSpectralLo) / kSpectralBins;
  std::vector<double> counts(kSpectralBins, 0.0);
  for (const double value : eigenvalues) {
    const int bin =
        static_cast<int>(std::floor((value - kSpectralLo) / width));
    if (bin >= 0 && bin < kSpectralBins) counts[static_cast<std::size_t>(bin)] += 1.0;
  }
  const double total = static_cast<double>(eigenvalues.size());
  double distance = 0.0;
  for (int b = 0; b < kSpectralBins; ++b) {
    const double mid = kSpectralLo + (b + 0.5) * width;
    const double empirical = counts[static_cast<std::size_t>(b)] / (total * width);
    distance += std::abs(empirical - rho_p(mid, p)) * width;
  }
  return distance;
}

/** @brief Histogram distance of a single ensemble draw. */
[[nodiscard]] inline double spectral_distance(const EnsembleMatrix& matrix,
                                              int p) {
  const Eigen::VectorXd eigenvalues = spectrum(matrix);
  return spectral_distance(
      std::vector<double>(eigenvalues.data(),
                          eigenvalues.data() + eigenvalues.size()),
      p);
}

// =============================================================================
// Determinant averages
// =============================================================================

/**
 * @brief (1/N) log of the Monte Carlo mean of |det(u - W)| over n_samples
 * draws of the antisymmetrized ensemble (real: bhgae with sigma^2 = 1/(p m);
 * complex: cbhgae with sigma^2 = 1/(2 p m)).
 *
 * Each |det| is accumulated as sum of log |u - lambda_i| over the spectrum
 * and the sample mean is taken in log space (log-sum-exp), so no overflow.
 */
[[nodiscard]] inline double mean_abs_det(double u, int m, int p, Field field,
                                         int n_samples, std::uint64_t seed) {
  detail::check_block_shape(m, p);
  if (n_samples < 1) {
    throw std::invalid_argument("mean_abs_det: n_samples >= 1 required");
  }
  std::vector<double> log_dets;
  log_dets.reserve(static_cast<std::size_t>(n_samples));
  double n_value = 0;
  for (int s = 0; s < n_samples; ++s) {
    const std::uint64_t stream = derive_stream(seed, static_cast<std::uint64_t>(s));
    const EnsembleMatrix w =
        field == Field::real
            ? sample_bhgae(m, p, 1.0 / (p * static_cast<double>(m)), stream)
            : sample_cbhgae(m, p, 1.0 / (2.0 * p * static_cast<double>(m)),
                            stream);
    const Eigen::VectorXd eigenvalues = spectrum(w);
    n_value = static_cast<double>(eigenvalues.size());
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
      log_det += std::log(std::abs(u - eigenvalues(i)));
    }
    log_dets.push_back(log_det);
  }
  const double peak = *std::max_element(log_dets.begin(), log_dets.end());
  double mean_exp = 0.0;
  for (const double value : log_dets) mean_exp += std::exp(value - peak);
  mean_exp /= static_cast<double>(n_samples);
  return (peak + std::log(mean_exp)) / n_value;
}

}  // namespace wedge
