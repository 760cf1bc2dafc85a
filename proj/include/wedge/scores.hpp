// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scores.hpp
 * @brief Frame scores of antisymmetric tensors: the pairing with a wedge of
 * frame columns, its normalized variants, analytic gradients, chart functions
 * at the origin of the standard coordinate patch, and the entanglement value.
 *
 * The pairing of a tensor with a d x p frame X is sum_sigma conj(c_sigma)
 * times the p x p minor of X on rows sigma. Orders p <= 3 use closed-form
 * minor kernels (p = 3 expands each 3 x 3 minor along its last row over
 * precomputed 2 x 2 minors); larger p falls back to LU factorizations of the
 * row submatrices with an adjugate-based cofactor step.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "wedge/antisym_tensor.hpp"
#include "wedge/combinatorics.hpp"

namespace wedge {

namespace detail {

/** @brief Pairing and (optionally) its holomorphic frame derivative. */
template <typename Scalar>
struct PairingResult {
  Scalar value = Scalar(0);
  Matrix<Scalar> derivative;  ///< d x p, entry (r,a) = d(pairing)/dX(r,a)
};

/** @brief Closed-form kernels for p = 1 and p = 2. */
template <typename Scalar>
PairingResult<Scalar> pairing_impl_p1(const AntisymTensor<Scalar>& tensor,
                                      const FrameMatrix<Scalar>& frame,
                                      bool want_derivative) {
  PairingResult<Scalar> result;
  result.value = tensor.coeffs.dot(frame.col(0));  // conj(c)^T x
  if (want_derivative) result.derivative = tensor.coeffs.conjugate();
  return result;
}

template <typename Scalar>
PairingResult<Scalar> pairing_impl_p2(const AntisymTensor<Scalar>& tensor,
                                      const FrameMatrix<Scalar>& frame,
                                      bool want_derivative) {
  const int d = tensor.d;
  PairingResult<Scalar> result;
  if (want_derivative) result.derivative = Matrix<Scalar>::Zero(d, 2);
  Eigen::Index rank = 0;
  Scalar value(0);
  for (int i = 0; i < d - 1; ++i) {
    const Scalar xi0 = frame(i, 0);
    const Scalar xi1 = frame(i, 1);
    for (int j = i + 1; j < d; ++j, ++rank) {
      const Scalar c = Eigen::numext::conj(tensor.coeffs[rank]);
      const Scalar xj0 = frame(j, 0);
      const Scalar xj1 = frame(j, 1);
      value += c * (xi0 * xj1 - xi1 * xj0);
      if (want_derivative) {
        result.derivative(i, 0) += c * xj1;
        result.derivative(i, 1) -= c * xj0;
        result.derivative(j, 0) -= c * xi1;
        result.derivative(j, 1) += c * xi0;
      }
    }
  }
  result.value = value;
  return result;
}

/**
 * @brief p = 3 kernel: precomputes all 2 x 2 minors over row pairs, then
 * expands every 3 x 3 minor along its last row. Cofactors reuse the same
 * table, so value plus derivative costs ~12 multiply-adds per triple.
 */
template <typename Scalar>
PairingResult<Scalar> pairing_impl_p3(const AntisymTensor<Scalar>& tensor,
                                      const FrameMatrix<Scalar>& frame,
                                      bool want_derivative) {
  const int d = tensor.d;
  PairingResult<Scalar> result;
  if (want_derivative) result.derivative = Matrix<Scalar>::Zero(d, 3);
  // pair_minor(q, cc) = 2x2 minor on row pair q and column pair cc, where
  // column pairs are enumerated (0,1), (0,2), (1,2).
  const Eigen::Index n_pairs = static_cast<Eigen::Index>(binomial(d, 2));
  Matrix<Scalar> pair_minor(n_pairs, 3);
  std::vector<Eigen::Index> pair_offset(static_cast<std::size_t>(d));
  {
    Eigen::Index q = 0;
    for (int i = 0; i < d - 1; ++i) {
      pair_offset[static_cast<std::size_t>(i)] = q - (i + 1);
      for (int j = i + 1; j < d; ++j, ++q) {
        const Scalar a0 = frame(i, 0), a1 = frame(i, 1), a2 = frame(i, 2);
        const Scalar b0 = frame(j, 0), b1 = frame(j, 1), b2 = frame(j, 2);
        pair_minor(q, 0) = a0 * b1 - a1 * b0;
        pair_minor(q, 1) = a0 * b2 - a2 * b0;
        pair_minor(q, 2) = a1 * b2 - a2 * b1;
      }
    }
  }
  const auto pair_at = [&](int i, int j) {
    return pair_offset[static_cast<std::size_t>(i)] + j;
  };
  Scalar value(0);
  Eigen::Index rank = 0;
  for (int i = 0; i < d - 2; ++i) {
    for (int j = i + 1; j < d - 1; ++j) {
      const Eigen::Index qij = pair_at(i, j);
      const Scalar mij01 = pair_minor(qij, 0);
      const Scalar mij02 = pair_minor(qij, 1);
      const Scalar mij12 = pair_minor(qij, 2);
      for (int k = j + 1; k < d; ++k, ++rank) {
        const Scalar c = Eigen::numext::conj(tensor.coeffs[rank]);
        // Expansion along row k with cofactors +-(2x2 minors of rows i,j).
        value += c * (frame(k, 0) * mij12 - frame(k, 1) * mij02 +
                      frame(k, 2) * mij01);
        if (want_derivative) {
          const Eigen::Index qik = pair_at(i, k);
          const Eigen::Index qjk = pair_at(j, k);
          result.derivative(i, 0) += c * pair_minor(qjk, 2);
          result.derivative(i, 1) -= c * pair_minor(qjk, 1);
          result.derivative(i, 2) += c * pair_minor(qjk, 0);
          result.derivative(j, 0) -= c * pair_minor(qik, 2);
          result.derivative(j, 1) += c * pair_minor(qik, 1);
          result.derivative(j, 2) -= c * pair_minor(qik, 0);
          result.derivative(k, 0) += c * mij12;
          result.derivative(k, 1) -= c * mij02;
          result.derivative(k, 2) += c * mij01;
        }
      }
    }
  }
  result.value = value;
  return result;
}

/**
 * @brief Generic kernel for p >= 4: per-tuple LU of the row submatrix for the
 * determinant, adjugate via the inverse for cofactors, with a minor-expansion
 * fallback when the submatrix is near singular.
 */
template <typename Scalar>
PairingResult<Scalar> pairing_impl_generic(const AntisymTensor<Scalar>& tensor,
                                           const FrameMatrix<Scalar>& frame,
                                           bool want_derivative) {
  const int d = tensor.d;
  const int p = tensor.p;
  PairingResult<Scalar> result;
  if (want_derivative) result.derivative = Matrix<Scalar>::Zero(d, p);
  Matrix<Scalar> sub(p, p);
  Matrix<Scalar> inverse(p, p);
  Matrix<Scalar> minor_buf(p - 1, p - 1);
  Eigen::PartialPivLU<Matrix<Scalar>> lu(p);
  const double frame_scale = frame.cwiseAbs().maxCoeff();
  std::vector<int> sigma;
  for (int i = 1; i <= p; ++i) sigma.push_back(i);
  Eigen::Index rank = 0;
  Scalar value(0);
  do {
    for (int row = 0; row < p; ++row) {
      sub.row(row) = frame.row(sigma[static_cast<std::size_t>(row)] - 1);
    }
    lu.compute(sub);
    const Scalar det = lu.determinant();
    const Scalar c = Eigen::numext::conj(tensor.coeffs[rank]);
    value += c * det;
    if (want_derivative) {
      const double det_floor =
          1e-10 * std::pow(std::max(frame_scale, 1e-300), p);
      if (std::abs(det) > det_floor) {
        // adj(sub) = det * inv(sub); cofactor matrix is its transpose.
        inverse = lu.inverse();
        for (int row = 0; row < p; ++row) {
          const int r = sigma[static_cast<std::size_t>(row)] - 1;
          for (int col = 0; col < p; ++col) {
            result.derivative(r, col) += c * det * inverse(col, row);
          }
        }
      } else {
        // Near-singular: cofactors from explicit (p-1) x (p-1) minors.
        for (int row = 0; row < p; ++row) {
          const int r = sigma[static_cast<std::size_t>(row)] - 1;
          for (int col = 0; col < p; ++col) {
            int mr = 0;
            for (int rr = 0; rr < p; ++rr) {
              if (rr == row) continue;
              int mc = 0;
              for (int cc = 0; cc < p; ++cc) {
                if (cc == col) continue;
                minor_buf(mr, mc) = sub(rr, cc);
                ++mc;
              }
              ++mr;
            }
            const double sign = ((row + col) % 2 == 0) ? 1.0 : -1.0;
            result.derivative(r, col) +=
                c * sign * minor_buf.determinant();
          }
        }
      }
    }
    ++rank;
  } while (next_tuple(d, sigma));
  result.value = value;
  return result;
}

/** @brief Dispatches the pairing kernels and validates dimensions. */
template <typename Scalar>
PairingResult<Scalar> pairing_with_derivative(
    const AntisymTensor<Scalar>& tensor, const FrameMatrix<Scalar>& frame,
    bool want_derivative) {
  if (frame.rows() != tensor.d || frame.cols() != tensor.p) {
    throw std::invalid_argument(
        "pairing: frame is " + std::to_string(frame.rows()) + "x" +
        std::to_string(frame.cols()) + " but tensor needs " +
        std::to_string(tensor.d) + "x" + std::to_string(tensor.p));
  }
  switch (tensor.p) {
    case 0: {
      PairingResult<Scalar> result;
      result.value = Eigen::numext::conj(tensor.coeffs[0]);
      if (want_derivative) result.derivative = Matrix<Scalar>::Zero(tensor.d, 0);
      return result;
    }
    case 1:
      return pairing_impl_p1(tensor, frame, want_derivative);
    case 2:
      return pairing_impl_p2(tensor, frame, want_derivative);
    case 3:
      return pairing_impl_p3(tensor, frame, want_derivative);
    default:
      return pairing_impl_generic(tensor, frame, want_derivative);
  }
}

/** @brief Gram determinant det(X^H X) as a real number. */
template <typename Scalar>
[[nodiscard]] double gram_det(const FrameMatrix<Scalar>& frame) {
  const Matrix<Scalar> gram = frame.adjoint() * frame;
  return Eigen::numext::real(gram.determinant());
}

}  // namespace detail

// =============================================================================
// Pairing and scores
// =============================================================================

/**
 * @brief Pairing of a tensor with the wedge of the frame columns:
 * sum over sorted tuples of conj(c_sigma) times the minor of X on those rows.
 *
 * Accepts any Eigen expression with matching scalar type.
 */
template <typename Scalar, typename Derived>
[[nodiscard]] Scalar pairing(const AntisymTensor<Scalar>& tensor,
                             const Eigen::MatrixBase<Derived>& frame) {
  static_assert(std::is_same_v<typename Derived::Scalar, Scalar>,
                "frame scalar type must match the tensor");
  const Matrix<Scalar> frame_eval = frame.derived();
  return detail::pairing_with_derivative(tensor, frame_eval, false).value;
}

inline constexpr double kDegenerateGramTol = 1e-12;

/**
 * @brief |pairing| normalized by the frame volume sqrt(det(X^H X)).
 *
 * Invariant under right multiplication of the frame by invertible p x p
 * matrices; over orthonormal frames its maximum is the injective norm.
 */
template <typename Scalar, typename Derived>
[[nodiscard]] double score(const AntisymTensor<Scalar>& tensor,
                           const Eigen::MatrixBase<Derived>& frame) {
  const Matrix<Scalar> frame_eval = frame.derived();
  const double gram = detail::gram_det(frame_eval);
  if (!(gram > kDegenerateGramTol)) {
    throw std::domain_error("score: degenerate frame, det(X^H X) = " +
                            std::to_string(gram));
  }
  const Scalar value = pairing(tensor, frame_eval);
  return std::abs(value) / std::sqrt(gram);
}

/** @brief score divided by sqrt(p(d-p)), the scale of the objective. */
template <typename Scalar, typename Derived>
[[nodiscard]] double normalized_score(const AntisymTensor<Scalar>& tensor,
                                      const Eigen::MatrixBase<Derived>& frame) {
  const int p = tensor.p;
  const int q = tensor.d - tensor.p;
  if (p * q == 0) {
    throw std::invalid_argument("normalized_score: needs 1 <= p <= d-1");
  }
  return score(tensor, frame) / std::sqrt(static_cast<double>(p) * q);
}

// =============================================================================
// Gradient
// =============================================================================

inline constexpr double kOrthonormalTol = 1e-8;

/**
 * @brief Euclidean gradient of the phase-aligned pairing at an orthonormal
 * frame: the ascent direction of |pairing| in frame space.
 *
 * Entry (r, a) accumulates conj(c_sigma) times the cofactor of X(r, a) over
 * tuples containing r, rotated by the pairing's phase. For complex scalars
 * the matrix packs (d/dRe, d/dIm) as real and imaginary parts.
 */
template <typename Scalar, typename Derived>
[[nodiscard]] Matrix<Scalar> score_gradient(
    const AntisymTensor<Scalar>& tensor,
    const Eigen::MatrixBase<Derived>& frame_like) {
  const Matrix<Scalar> frame = frame_like.derived();
  if (frame.rows() != tensor.d || frame.cols() != tensor.p) {
    throw std::invalid_argument("score_gradient: frame dimension mismatch");
  }
  const Matrix<Scalar> gram = frame.adjoint() * frame;
  const double defect =
      (gram - Matrix<Scalar>::Identity(tensor.p, tensor.p))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kOrthonormalTol) {
    throw std::invalid_argument(
        "score_gradient: frame not orthonormal (defect " +
        std::to_string(defect) + ")");
  }
  const auto result = detail::pairing_with_derivative(tensor, frame, true);
  if constexpr (is_complex_v<Scalar>) {
    const double magnitude = std::abs(result.value);
    const Scalar phase =
        magnitude > 0 ? result.value / magnitude : Scalar(1);
    return (phase * result.derivative.conjugate()).eval();
  } else {
    const double sign = result.value < 0 ? -1.0 : 1.0;
    return (sign * result.derivative).eval();
  }
}

// =============================================================================
// Chart functions
// =============================================================================

/** @brief Lifted frame [I_p ; B] of a chart matrix B ((d-p) x p). */
template <typename Derived>
[[nodiscard]] Matrix<typename Derived::Scalar> lift_chart(
    const Eigen::MatrixBase<Derived>& chart) {
  using Scalar = typename Derived::Scalar;
  const int p = static_cast<int>(chart.cols());
  const int d = p + static_cast<int>(chart.rows());
  Matrix<Scalar> lifted(d, p);
  lifted.topRows(p) = Matrix<Scalar>::Identity(p, p);
  lifted.bottomRows(d - p) = chart;
  return lifted;
}

/**
 * @brief Signed chart value at B: pairing([I;B]) / (sqrt(p(d-p)) sqrt(det))
 * with the phase kept — the real part for complex scalars.
 */
template <typename Scalar, typename Derived>
[[nodiscard]] double chart_score(const AntisymTensor<Scalar>& tensor,
                                 const Eigen::MatrixBase<Derived>& chart) {
  static_assert(std::is_same_v<typename Derived::Scalar, Scalar>,
                "chart scalar type must match the tensor");
  const int p = tensor.p;
  const int q = tensor.d - tensor.p;
  if (static_cast<int>(chart.rows()) != q ||
      static_cast<int>(chart.cols()) != p) {
    throw std::invalid_argument("chart_score: B must be (d-p) x p");
  }
  const Matrix<Scalar> lifted = lift_chart(chart);
  const double gram = detail::gram_det(lifted);
  const Scalar value = pairing(tensor, lifted);
  return Eigen::numext::real(value) /
         (std::sqrt(static_cast<double>(p) * q) * std::sqrt(gram));
}

/**
 * @brief Dense symmetric Hessian of the chart value at B = 0 by central
 * differences; coordinates (i, a) are flattened row-major to i*p + a.
 */
template <typename Scalar>
[[nodiscard]] Eigen::MatrixXd chart_hessian_fd(
    const AntisymTensor<Scalar>& tensor, double step = 1e-4) {
  if (!(step > 0)) {
    throw std::invalid_argument("chart_hessian_fd: step must be positive");
  }
  const int p = tensor.p;
  const int q = tensor.d - tensor.p;
  const int n = p * q;
  const auto value_at = [&](const Matrix<Scalar>& chart) {
    return chart_score(tensor, chart);
  };
  const Matrix<Scalar> origin = Matrix<Scalar>::Zero(q, p);
  const double center = value_at(origin);
  Eigen::MatrixXd hessian(n, n);
  for (int u = 0; u < n; ++u) {
    const int iu = u / p;
    const int au = u % p;
    Matrix<Scalar> plus = origin, minus = origin;
    plus(iu, au) += step;
    minus(iu, au) -= step;
    hessian(u, u) =
        (value_at(plus) - 2.0 * center + value_at(minus)) / (step * step);
    for (int v = u + 1; v < n; ++v) {
      const int iv = v / p;
      const int av = v % p;
      Matrix<Scalar> pp = origin, pm = origin, mp = origin, mm = origin;
      pp(iu, au) += step;
      pp(iv, av) += step;
      pm(iu, au) += step;
      pm(iv, av) -= step;
      mp(iu, au) -= step;
      mp(iv, av) += step;
      mm(iu, au) -= step;
      mm(iv, av) -= step;
      const double mixed = (value_at(pp) - value_at(pm) - value_at(mp) +
                            value_at(mm)) /
                           (4.0 * step * step);
      hessian(u, v) = mixed;
      hessian(v, u) = mixed;
    }
  }
  return hessian;
}

// =============================================================================
// Entanglement value
// =============================================================================

/**
 * @brief Geometric entanglement of a normalized state from the injective norm
 * of its normalized tensor: -2 log(input) for input in (0, 1].
 */
[[nodiscard]] inline double gme(double inj_norm_of_normalized_state) {
  if (!(inj_norm_of_normalized_state > 0.0) ||
      inj_norm_of_normalized_state > 1.0 + 1e-9) {
    throw std::invalid_argument(
        "gme: injective norm of a normalized state must lie in (0, 1], got " +
        std::to_string(inj_norm_of_normalized_state));
  }
  return -2.0 * std::log(inj_norm_of_normalized_state);
}

}  // namespace wedge
