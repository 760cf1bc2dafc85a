// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_antisym_tensor.cpp
 * @brief Tests for tensor construction, entries, norms, duality and I/O.
 */

#include "wedge/antisym_tensor.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

namespace {

using cplx = std::complex<double>;
using wedge::AntisymTensor;
using wedge::binomial;
using wedge::entry;
using wedge::hodge;
using wedge::hs_norm_sq;
using wedge::load_tensor;
using wedge::rank_tuple;
using wedge::sample_gaussian;
using wedge::save_tensor;
using wedge::zero_tensor;

// =============================================================================
// entry
// =============================================================================

TEST_CASE("entry: sign flips under transposition") {
  auto t = zero_tensor<double>(4, 2);
  t.coeffs[rank_tuple(4, {1, 3})] = 0.75;
  CHECK(entry(t, {1, 3}) == 0.75);
  CHECK(entry(t, {3, 1}) == -0.75);
  CHECK(entry(t, {2, 2}) == 0.0);
}

TEST_CASE("entry: even 3-cycle keeps the sign") {
  auto t = zero_tensor<double>(5, 3);
  t.coeffs[rank_tuple(5, {1, 2, 3})] = 2.5;
  // (3,1,2) -> (1,2,3) is an even permutation.
  CHECK(entry(t, {3, 1, 2}) == 2.5);
  CHECK(entry(t, {2, 1, 3}) == -2.5);
}

TEST_CASE("entry: validates indices and arity") {
  auto t = zero_tensor<double>(4, 2);
  CHECK_THROWS_AS((void)entry(t, {1, 5}), std::invalid_argument);
  CHECK_THROWS_AS((void)entry(t, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)entry(t, {1, 2, 3}), std::invalid_argument);
}

// =============================================================================
// hs_norm_sq
// =============================================================================

TEST_CASE("hs_norm_sq: includes the p! multiplicity") {
  auto t = zero_tensor<double>(3, 2);
  t.coeffs.setOnes();  // three coefficients
  CHECK(hs_norm_sq(t) == doctest::Approx(6.0));  // 2! * 3
  CHECK(hs_norm_sq(zero_tensor<double>(5, 2)) == 0.0);
}

TEST_CASE("hs_norm_sq: Gaussian mean d!/(d-p)! at d=4, p=2") {
  const int n = 10000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += hs_norm_sq(sample_gaussian<double>(4, 2, 1000 + i));
  }
  const double mean = sum / n;
  // Var per sample = (p!)^2 * 2 C(4,2) = 48, so 3 SE = 3 sqrt(48/n).
  CHECK(std::abs(mean - 12.0) < 3.0 * std::sqrt(48.0 / n));
}

// =============================================================================
// sample_gaussian
// =============================================================================

TEST_CASE("sample_gaussian: determinism and shape validation") {
  const auto a = sample_gaussian<double>(6, 2, 42);
  const auto b = sample_gaussian<double>(6, 2, 42);
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  CHECK((a.coeffs - b.coeffs).norm() == 0.0);
  const auto c = sample_gaussian<double>(6, 2, 43);
  CHECK((a.coeffs - c.coeffs).norm() > 0.0);
  CHECK_THROWS_AS((void)sample_gaussian<double>(3, 4, 0),
                  std::invalid_argument);
}

TEST_CASE("sample_gaussian: real norm statistics at d=6, p=2") {
  const int n = 10000;
  double sum = 0.0;
  double sum_sq = 0.0;
  double below_1 = 0;  // concentration counters at x = 1, 2
  double below_2 = 0;
  const double mean_exact = 30.0;  // d!/(d-p)! = 6*5
  for (int i = 0; i < n; ++i) {
    const double v = hs_norm_sq(sample_gaussian<double>(6, 2, 777 + i));
    sum += v;
    sum_sq += v * v;
    if (v <= mean_exact - 2.0 * std::sqrt(2.0 * mean_exact) * 1.0) ++below_1;
    if (v <= mean_exact - 2.0 * std::sqrt(2.0 * mean_exact) * 2.0) ++below_2;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // Norm^2 / p! is chi^2 with C(6,2) = 15 dof: mean 30, variance 4*2*15.
  CHECK(std::abs(mean - mean_exact) < 3.0 * std::sqrt(120.0 / n));
  CHECK(std::abs(var - 120.0) < 0.15 * 120.0);
  // Lower-tail deviation events happen with probability <= exp(-x^2).
  CHECK(below_1 / n <= std::exp(-1.0) + 3.0 * std::sqrt(0.37 * 0.63 / n));
  CHECK(below_2 / n <= std::exp(-4.0) + 3.0 * std::sqrt(0.02 * 0.98 / n));
}

TEST_CASE("sample_gaussian: complex norm statistics at d=6, p=2") {
  const int n = 10000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += hs_norm_sq(sample_gaussian<cplx>(6, 2, 31337 + i));
  }
  for (int i = 0; i < n; ++i) {
    const double v = hs_norm_sq(sample_gaussian<cplx>(6, 2, 31337 + i));
    sum_sq += (v - sum / n) * (v - sum / n);
  }
  const double mean = sum / n;
  const double var = sum_sq / n;
  // Norm^2 is (p!/2) chi^2(2 C(6,2)): mean 30, variance (p!/2)^2*2*30 = 60.
  CHECK(std::abs(mean - 30.0) < 3.0 * std::sqrt(60.0 / n));
  // SD of the variance estimate for chi^2(30) scaled: ~0.93 at n = 1e4.
  CHECK(std::abs(var - 60.0) < 3.0);
}

// =============================================================================
// hodge
// =============================================================================

TEST_CASE("hodge: d=4 p=2 basis example") {
  auto t = zero_tensor<double>(4, 2);
  t.coeffs[rank_tuple(4, {1, 3})] = 1.0;
  const auto dual = hodge(t);
  REQUIRE(dual.p == 2);
  // The complement of (1,3) ordered evenly is (4,2), i.e. -1 on (2,4).
  CHECK(dual.coeffs[rank_tuple(4, {2, 4})] == -1.0);
  CHECK(dual.coeffs.cwiseAbs().sum() == 1.0);  // single nonzero coefficient
}

TEST_CASE("hodge: d=3 p=1 basis example") {
  auto t = zero_tensor<double>(3, 1);
  t.coeffs[rank_tuple(3, {1})] = 1.0;
  const auto dual = hodge(t);
  REQUIRE(dual.p == 2);
  CHECK(dual.coeffs[rank_tuple(3, {2, 3})] == 1.0);
}

TEST_CASE("hodge: coefficient permutation preserves sum |c|^2") {
  const auto t = sample_gaussian<double>(6, 2, 5);
  const auto dual = hodge(t);
  // Weighted norms carry p! resp. (d-p)!; the invariant is the plain sum.
  CHECK(t.coeffs.squaredNorm() ==
        doctest::Approx(dual.coeffs.squaredNorm()).epsilon(1e-14));
  CHECK(hs_norm_sq(dual) / wedge::detail::factorial(4) ==
        doctest::Approx(hs_norm_sq(t) / wedge::detail::factorial(2))
            .epsilon(1e-14));
}

TEST_CASE("hodge: double dual is (-1)^{p(d-p)} identity") {
  struct Shape {
    int d, p;
  };
  for (const auto [d, p] : {Shape{6, 2}, Shape{5, 2}, Shape{4, 1}, Shape{7, 3},
                            Shape{4, 2}}) {
    const auto t = sample_gaussian<double>(d, p, 17);
    const auto twice = hodge(hodge(t));
    const double sign = (p * (d - p)) % 2 == 0 ? 1.0 : -1.0;
    CHECK((twice.coeffs - sign * t.coeffs).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("hodge: complex coefficients move with real signs") {
  const auto t = sample_gaussian<cplx>(5, 2, 23);
  const auto dual = hodge(t);
  CHECK(t.coeffs.squaredNorm() ==
        doctest::Approx(dual.coeffs.squaredNorm()).epsilon(1e-14));
  const auto twice = hodge(hodge(t));
  // p(d-p) = 6 is even.
  CHECK((twice.coeffs - t.coeffs).cwiseAbs().maxCoeff() == 0.0);
}

// =============================================================================
// Serialization
// =============================================================================

TEST_CASE("save/load: exact real round trip") {
  const auto t = sample_gaussian<double>(6, 3, 99);
  std::stringstream buffer;
  save_tensor(t, buffer);
  const auto back = load_tensor<double>(buffer);
  CHECK(back.d == t.d);
  CHECK(back.p == t.p);
  CHECK((back.coeffs - t.coeffs).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("save/load: exact complex round trip and field check") {
  const auto t = sample_gaussian<cplx>(5, 2, 100);
  std::stringstream buffer;
  save_tensor(t, buffer);
  const std::string text = buffer.str();
  {
    std::stringstream read_back(text);
    const auto back = load_tensor<cplx>(read_back);
    CHECK((back.coeffs - t.coeffs).cwiseAbs().maxCoeff() == 0.0);
  }
  {
    std::stringstream wrong_field(text);
    CHECK_THROWS_AS((void)load_tensor<double>(wrong_field),
                    std::runtime_error);
  }
}

}  // namespace
