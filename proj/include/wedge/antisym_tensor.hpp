// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file antisym_tensor.hpp
 * @brief Antisymmetric tensors over R or C with Gaussian sampling, entry
 * access, Hilbert-Schmidt norm, Hodge duality and CSV serialization.
 *
 * A tensor of order p on dimension d stores one coefficient c_sigma per
 * strictly increasing tuple sigma, indexed by lexicographic rank; every other
 * entry follows by antisymmetry. All types are immutable by convention after
 * construction and all sampling is pure given an explicit seed.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/combinatorics.hpp"
#include "wedge/rng.hpp"

namespace wedge {

// =============================================================================
// Scalar fields
// =============================================================================

/** @brief Scalar field tag used by runtime dispatch (CLI, serialization). */
enum class Field { real, complex };

template <typename Scalar>
inline constexpr bool is_complex_v = false;
template <>
inline constexpr bool is_complex_v<std::complex<double>> = true;

/** @brief Field tag of a scalar type. */
template <typename Scalar>
[[nodiscard]] constexpr Field field_of() noexcept {
  return is_complex_v<Scalar> ? Field::complex : Field::real;
}

/** @brief Printable name of a field tag. */
[[nodiscard]] inline std::string field_name(Field field) {
  return field == Field::real ? "real" : "complex";
}

/** @brief Parses "real" / "complex". */
[[nodiscard]] inline Field parse_field(const std::string& name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw std::invalid_argument("unknown field '" + name +
                              "' (expected real|complex)");
}

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

/** @brief A d x p matrix whose columns span a candidate p-plane. */
template <typename Scalar>
using FrameMatrix = Matrix<Scalar>;

// =============================================================================
// AntisymTensor
// =============================================================================

/**
 * @brief Order-p antisymmetric tensor on dimension d.
 *
 * coeffs[r] is the tensor entry at the rank-r sorted tuple; the full tensor is
 * determined by antisymmetry. Treat instances as immutable once built.
 */
template <typename Scalar>
struct AntisymTensor {
  int d = 0;              ///< ambient dimension
  int p = 0;              ///< tensor order, 0 <= p <= d
  Vector<Scalar> coeffs;  ///< length C(d, p), lexicographic rank order

  [[nodiscard]] Field field() const noexcept { return field_of<Scalar>(); }
};

using AntisymTensorR = AntisymTensor<double>;
using AntisymTensorC = AntisymTensor<std::complex<double>>;

namespace detail {

inline void check_shape(int d, int p) {
  if (d < 0 || p < 0 || p > d) {
    throw std::invalid_argument("tensor shape requires 0 <= p <= d, got d=" +
                                std::to_string(d) + " p=" + std::to_string(p));
  }
}

/** @brief p! as a double. */
[[nodiscard]] inline double factorial(int p) {
  double result = 1.0;
  for (int i = 2; i <= p; ++i) result *= i;
  return result;
}

}  // namespace detail

// =============================================================================
// Construction and sampling
// =============================================================================

/** @brief Zero tensor of the given shape. */
template <typename Scalar>
[[nodiscard]] AntisymTensor<Scalar> zero_tensor(int d, int p) {
  detail::check_shape(d, p);
  AntisymTensor<Scalar> tensor{d, p, Vector<Scalar>::Zero(
                                         static_cast<Eigen::Index>(
                                             binomial(d, p)))};
  return tensor;
}

/**
 * @brief Gaussian tensor: independent coefficients, real standard normal or
 * standard complex normal (E|c|^2 = 1), filled in rank order from a SplitMix64
 * stream seeded with rng_seed.
 */
template <typename Scalar>
[[nodiscard]] AntisymTensor<Scalar> sample_gaussian(int d, int p,
                                                    std::uint64_t rng_seed) {
  detail::check_shape(d, p);
  if (p < 1) {
    throw std::invalid_argument("sample_gaussian: order must satisfy p >= 1");
  }
  AntisymTensor<Scalar> tensor = zero_tensor<Scalar>(d, p);
  SplitMix64 gen(rng_seed);
  for (Eigen::Index r = 0; r < tensor.coeffs.size(); ++r) {
    if constexpr (is_complex_v<Scalar>) {
      tensor.coeffs[r] = gen.normal_complex();
    } else {
      tensor.coeffs[r] = gen.normal();
    }
  }
  return tensor;
}

// =============================================================================
// Entry access and norm
// =============================================================================

/**
 * @brief Full tensor entry at an arbitrary (not necessarily sorted) tuple:
 * the sign of the sorting permutation times the stored coefficient, zero if
 * any index repeats.
 */
template <typename Scalar>
[[nodiscard]] Scalar entry(const AntisymTensor<Scalar>& tensor,
                           const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != tensor.p) {
    throw std::invalid_argument("entry: tuple length " +
                                std::to_string(tuple.size()) +
                                " does not match order " +
                                std::to_string(tensor.p));
  }
  for (const int t : tuple) {
    if (t < 1 || t > tensor.d) {
      throw std::invalid_argument("entry: index " + std::to_string(t) +
                                  " outside [1, " + std::to_string(tensor.d) +
                                  "]");
    }
  }
  std::vector<int> sorted = tuple;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Scalar(0);
  const Scalar c = tensor.coeffs[static_cast<Eigen::Index>(
      rank_tuple(tensor.d, sorted))];
  return static_cast<double>(sign) * c;
}

/** @brief Squared Hilbert-Schmidt norm over all d^p entries: p! sum |c|^2. */
template <typename Scalar>
[[nodiscard]] double hs_norm_sq(const AntisymTensor<Scalar>& tensor) {
  return detail::factorial(tensor.p) * tensor.coeffs.squaredNorm();
}

// =============================================================================
// Hodge duality
// =============================================================================

/**
 * @brief Hodge dual: order p -> order d-p.
 *
 * The coefficient on a sorted tuple sigma moves to the sorted complement
 * tuple, multiplied by the parity of the concatenated permutation
 * (sigma, complement) of {1, ..., d}. This permutes coefficients with unit
 * signs, so sum |c|^2 is preserved and applying the dual twice gives
 * (-1)^{p(d-p)} times the identity.
 */
template <typename Scalar>
[[nodiscard]] AntisymTensor<Scalar> hodge(const AntisymTensor<Scalar>& tensor) {
  const int d = tensor.d;
  const int p = tensor.p;
  AntisymTensor<Scalar> dual = zero_tensor<Scalar>(d, d - p);
  std::vector<int> sigma;
  for (int i = 1; i <= p; ++i) sigma.push_back(i);
  std::vector<bool> in_sigma(static_cast<std::size_t>(d) + 1, false);
  std::uint64_t rank = 0;
  do {
    std::fill(in_sigma.begin(), in_sigma.end(), false);
    for (const int s : sigma) in_sigma[static_cast<std::size_t>(s)] = true;
    std::vector<int> concatenated = sigma;
    std::vector<int> complement;
    for (int v = 1; v <= d; ++v) {
      if (!in_sigma[static_cast<std::size_t>(v)]) {
        concatenated.push_back(v);
        complement.push_back(v);
      }
    }
    const int sign = permutation_sign(concatenated);
    dual.coeffs[static_cast<Eigen::Index>(rank_tuple(d, complement))] =
        static_cast<double>(sign) *
        tensor.coeffs[static_cast<Eigen::Index>(rank)];
    ++rank;
  } while (next_tuple(d, sigma));
  return dual;
}

// =============================================================================
// Serialization
// =============================================================================

/**
 * @brief Writes a tensor as CSV: a `d,p,field` header row, its values, a
 * coefficient header, then one row per rank with full double precision.
 */
template <typename Scalar>
void save_tensor(const AntisymTensor<Scalar>& tensor, std::ostream& out) {
  out << "d,p,field\n"
      << tensor.d << ',' << tensor.p << ',' << field_name(tensor.field())
      << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  if constexpr (is_complex_v<Scalar>) {
    out << "rank,re,im\n";
    for (Eigen::Index r = 0; r < tensor.coeffs.size(); ++r) {
      out << r << ',' << tensor.coeffs[r].real() << ','
          << tensor.coeffs[r].imag() << '\n';
    }
  } else {
    out << "rank,re\n";
    for (Eigen::Index r = 0; r < tensor.coeffs.size(); ++r) {
      out << r << ',' << tensor.coeffs[r] << '\n';
    }
  }
}

template <typename Scalar>
void save_tensor(const AntisymTensor<Scalar>& tensor,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_tensor: cannot open " + path);
  save_tensor(tensor, out);
}

/** @brief Reads a tensor written by save_tensor; field must match Scalar. */
template <typename Scalar>
[[nodiscard]] AntisymTensor<Scalar> load_tensor(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) {
      throw std::runtime_error("load_tensor: truncated input");
    }
    return line;
  };
  if (next_line() != "d,p,field") {
    throw std::runtime_error("load_tensor: missing d,p,field header");
  }
  next_line();
  std::istringstream header(line);
  std::string d_str, p_str, field_str;
  std::getline(header, d_str, ',');
  std::getline(header, p_str, ',');
  std::getline(header, field_str, ',');
  const int d = std::stoi(d_str);
  const int p = std::stoi(p_str);
  if (parse_field(field_str) != field_of<Scalar>()) {
    throw std::runtime_error("load_tensor: stored field '" + field_str +
                             "' does not match requested scalar type");
  }
  next_line();  // coefficient header row
  AntisymTensor<Scalar> tensor = zero_tensor<Scalar>(d, p);
  for (Eigen::Index r = 0; r < tensor.coeffs.size(); ++r) {
    next_line();
    std::istringstream row(line);
    std::string rank_str, re_str, im_str;
    std::getline(row, rank_str, ',');
    std::getline(row, re_str, ',');
    if (std::stoll(rank_str) != static_cast<long long>(r)) {
      throw std::runtime_error("load_tensor: rank mismatch at row " +
                               std::to_string(r));
    }
    if constexpr (is_complex_v<Scalar>) {
      std::getline(row, im_str, ',');
      tensor.coeffs[r] = Scalar(std::stod(re_str), std::stod(im_str));
    } else {
      tensor.coeffs[r] = std::stod(re_str);
    }
  }
  return tensor;
}

template <typename Scalar>
[[nodiscard]] AntisymTensor<Scalar> load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_tensor: cannot open " + path);
  return load_tensor<Scalar>(in);
}

}  // namespace wedge
