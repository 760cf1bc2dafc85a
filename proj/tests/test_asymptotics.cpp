// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_asymptotics.cpp
 * @brief Tests for the bound functions: omega, sigma_p, alpha_p, beta,
 *        gamma_alpha, log-volumes, HS mean asymptotics, and bound tables.
 */

#include "wedge/asymptotics.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using wedge::alpha_p;
using wedge::AsymptoticRegime;
using wedge::beta;
using wedge::bound_table_alpha;
using wedge::bound_table_beta;
using wedge::bound_table_gamma;
using wedge::BoundTable;
using wedge::e0;
using wedge::Field;
using wedge::gamma_alpha;
using wedge::gamma_expansion;
using wedge::hs_mean_asymptotics;
using wedge::log_hs_mean_exact;
using wedge::log_k;
using wedge::log_l;
using wedge::log_vol_grassmann;
using wedge::omega;
using wedge::omega_derivative;
using wedge::omega_quadrature;
using wedge::save_csv;
using wedge::sigma_p;
using wedge::write_csv;

// =============================================================================
// omega
// =============================================================================

TEST_CASE("omega: interior values") {
  CHECK(omega(0.0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(omega(2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(omega(-2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(omega(1.0) == doctest::Approx(0.25 - 0.5).epsilon(1e-14));
}

TEST_CASE("omega: even function") {
  for (const double u : {0.3, 1.7, 2.4, 5.0}) {
    CHECK(omega(u) == omega(-u));
    CHECK(omega_derivative(u) == -omega_derivative(-u));
  }
}

TEST_CASE("omega: continuous at the spectral edge") {
  const double eps = 1e-12;
  CHECK(std::abs(omega(2.0 + eps) - omega(2.0 - eps)) < 1e-10);
  CHECK(std::abs(omega(-2.0 - eps) - omega(-2.0 + eps)) < 1e-10);
}

TEST_CASE("omega: one-sided derivatives agree at the edge") {
  const double eps = 1e-13;
  CHECK(std::abs(omega_derivative(2.0 + eps) - omega_derivative(2.0 - eps)) <
        1e-6);
  CHECK(omega_derivative(2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("omega: derivative matches finite differences") {
  const double h = 1e-6;
  for (const double u : {0.0, 0.9, 1.5, 2.5, 4.0, 10.0}) {
    const double fd = (omega(u + h) - omega(u - h)) / (2.0 * h);
    CHECK(omega_derivative(u) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK(omega_derivative(1.2) == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("omega: log tail at large argument") {
  CHECK(std::abs(omega(1000.0) - std::log(1000.0)) < 1e-5);
  CHECK(std::abs(omega(-1000.0) - std::log(1000.0)) < 1e-5);
}

TEST_CASE("omega: quadrature cross-validation outside the support") {
  for (const double u : {2.2, 3.0, 5.0, 10.0, -2.5}) {
    CHECK(omega(u) == doctest::Approx(omega_quadrature(u)).epsilon(1e-9));
  }
}

TEST_CASE("omega: quadrature cross-validation inside the support") {
  // The integrand has a logarithmic singularity inside the support, so the
  // node-based oracle converges more slowly there.
  for (const double u : {0.0, 0.5, 1.0, 1.7}) {
    CHECK(std::abs(omega(u) - omega_quadrature(u)) < 1e-3);
  }
}

TEST_CASE("omega_quadrature: rejects a non-positive node count") {
  CHECK_THROWS_AS((void)omega_quadrature(1.0, 0), std::invalid_argument);
}

// =============================================================================
// sigma_p
// =============================================================================

TEST_CASE("sigma_p: zero at sqrt(2) for p=2") {
  CHECK(std::abs(sigma_p(std::sqrt(2.0), 2)) < 1e-10);
}

TEST_CASE("sigma_p: zero near 2.870/sqrt(3) for p=3") {
  CHECK(std::abs(sigma_p(2.870 / std::sqrt(3.0), 3)) < 1e-3);
}

TEST_CASE("sigma_p: value at the origin") {
  // sigma_p(0) = log(p-1)/2, which vanishes at p=2 and is positive after.
  CHECK(std::abs(sigma_p(0.0, 2)) < 1e-12);
  for (const int p : {3, 4, 5, 10}) {
    CHECK(sigma_p(0.0, p) ==
          doctest::Approx(0.5 * std::log(p - 1.0)).epsilon(1e-12));
    CHECK(sigma_p(0.0, p) > 0.0);
  }
}

TEST_CASE("sigma_p: monotone decrease on the sampled grid") {
  // Strictly decreasing for p >= 3; for p = 2 the function is flat (zero)
  // up to sqrt(2) and strictly decreasing beyond.
  const double step = 1e-2;
  for (const int p : {3, 4, 10, 50}) {
    double prev = sigma_p(step, p);
    for (double u = 2.0 * step; u <= 10.0; u += step) {
      const double cur = sigma_p(u, p);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  double prev = sigma_p(std::sqrt(2.0) + step, 2);
  for (double u = std::sqrt(2.0) + 2.0 * step; u <= 10.0; u += step) {
    const double cur = sigma_p(u, 2);
    CHECK(cur < prev);
    prev = cur;
  }
  for (double u = step; u <= std::sqrt(2.0); u += step) {
    CHECK(std::abs(sigma_p(u, 2)) < 1e-12);
  }
}

TEST_CASE("sigma_p: exactly one sign change on (0, 10]") {
  for (const int p : {2, 3, 4, 10, 50}) {
    int changes = 0;
    bool negative = false;
    for (double u = 1e-2; u <= 10.0; u += 1e-2) {
      const bool now_negative = sigma_p(u, p) < -1e-13;
      if (now_negative && !negative) {
        ++changes;
      }
      negative = now_negative;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("sigma_p: rejects p < 2") {
  CHECK_THROWS_AS((void)sigma_p(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sigma_p(1.0, 0), std::invalid_argument);
}

// =============================================================================
// e0 / alpha_p
// =============================================================================

TEST_CASE("e0: p=2 root is sqrt(2)") {
  CHECK(e0(2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("alpha_p: reference values") {
  CHECK(std::abs(alpha_p(2) - 2.0) < 1e-6);
  CHECK(std::abs(alpha_p(3) - 2.870) < 0.005);
  CHECK(std::abs(alpha_p(4) - 3.588) < 0.005);
}

TEST_CASE("e0: roots are positive and the rate function vanishes there") {
  for (const int p : {2, 3, 4, 7, 20}) {
    const double root = e0(p);
    CHECK(root > 0.0);
    CHECK(std::abs(sigma_p(root, p)) < 1e-8);
  }
}

TEST_CASE("alpha_p: increasing in p") {
  double prev = alpha_p(2);
  for (int p = 3; p <= 10; ++p) {
    const double cur = alpha_p(p);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("e0: rejects p < 2") {
  CHECK_THROWS_AS((void)e0(1), std::invalid_argument);
  CHECK_THROWS_AS((void)alpha_p(0), std::invalid_argument);
}

// =============================================================================
// beta
// =============================================================================

TEST_CASE("beta: value at one half") {
  // beta(1/2) = 3/4 - (3/2) log 2.
  const double expected = 0.75 - 1.5 * std::log(2.0);
  CHECK(beta(0.5) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::abs(beta(0.5) - (-0.28972)) < 1e-5);
}

TEST_CASE("beta: symmetric under alpha -> 1 - alpha") {
  CHECK(std::abs(beta(0.3) - beta(0.7)) < 2e-15);
  for (int k = 1; k <= 97; ++k) {
    const double a = static_cast<double>(k) / 98.0;
    CHECK(std::abs(beta(a) - beta(1.0 - a)) < 1e-13);
  }
}

TEST_CASE("beta: diverges to minus infinity at the endpoints") {
  CHECK(beta(1e-4) > beta(1e-6));
  CHECK(beta(1e-6) > beta(1e-8));
  CHECK(beta(1e-8) < -5.0);
}

TEST_CASE("beta: rejects the endpoints") {
  CHECK_THROWS_AS((void)beta(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)beta(1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)beta(-0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)beta(1.1), std::invalid_argument);
}

// =============================================================================
// gamma_alpha / gamma_expansion
// =============================================================================

TEST_CASE("gamma_alpha: reference value at d=100") {
  CHECK(std::abs(gamma_alpha(100.0, 0.5) - 2.344) < 0.01);
}

TEST_CASE("gamma_alpha: satisfies its defining equation") {
  for (const double d : {50.0, 100.0, 1e4, 1e8}) {
    const double g = gamma_alpha(d, 0.5);
    const double residual = 0.5 * std::log(d) + beta(0.5) + omega(g) - 0.5 * g * g;
    CHECK(std::abs(residual) < 1e-9);
  }
}

TEST_CASE("gamma_alpha: symmetric in alpha through beta") {
  CHECK(gamma_alpha(100.0, 0.3) ==
        doctest::Approx(gamma_alpha(100.0, 0.7)).epsilon(1e-9));
}

TEST_CASE("gamma_alpha: interior-branch root below 2") {
  // At d=10, alpha=0.5 the root lies inside the support and has the
  // closed form 2 sqrt(log(d)/2 + beta - 1/2).
  const double level = 0.5 * std::log(10.0) + beta(0.5);
  const double expected = 2.0 * std::sqrt(level - 0.5);
  CHECK(expected < 2.0);
  CHECK(gamma_alpha(10.0, 0.5) == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("gamma_alpha: expansion residual shrinks like o(1/sqrt(log d))") {
  // Expanding the root one order past the three shipped terms gives
  //   gamma - expansion = -(s - 2)^2 / (8 (log d)^{3/2}) + h.o.t.,
  // with s = log log d + 2 beta(alpha). The coefficient has a double zero
  // at s = 2 (d ~ 5.4e5 for alpha = 1/2), so the scaled residual
  // |gamma - expansion| sqrt(log d) decreases to a dip near d = 1e6,
  // rebounds, and only then decays like (log log d)^2 / log d.
  const auto scaled_residual = [](double d) {
    return std::abs(gamma_alpha(d, 0.5) - gamma_expansion(d, 0.5)) *
           std::sqrt(std::log(d));
  };
  CHECK(scaled_residual(1e4) < scaled_residual(1e2));
  CHECK(scaled_residual(1e6) < scaled_residual(1e4));
  CHECK(scaled_residual(1e6) < 1e-4);         // the dip sits near the zero
  CHECK(scaled_residual(1e8) > scaled_residual(1e6));  // and then rebounds
  for (const double d : {1e8, 1e12}) {
    const double ld = std::log(d);
    const double s = std::log(ld) + 2.0 * beta(0.5);
    const double predicted = (s - 2.0) * (s - 2.0) / (8.0 * ld * std::sqrt(ld));
    const double actual = std::abs(gamma_alpha(d, 0.5) - gamma_expansion(d, 0.5));
    CHECK(actual < 1e-3);
    CHECK(actual / predicted == doctest::Approx(1.0).epsilon(0.25));
  }
}

TEST_CASE("gamma_alpha: reports when no root exists") {
  // At d=3, alpha=0.5 the level term is below the minimum attainable value.
  CHECK_THROWS_AS((void)gamma_alpha(3.0, 0.5), std::runtime_error);
  try {
    (void)gamma_alpha(3.0, 0.5);
  } catch (const std::runtime_error& err) {
    const std::string what = err.what();
    CHECK(what.find("no root") != std::string::npos);
    CHECK(what.find("alpha=0.5") != std::string::npos);
  }
}

TEST_CASE("gamma_alpha: validates arguments") {
  CHECK_THROWS_AS((void)gamma_alpha(2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)gamma_alpha(100.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS((void)gamma_expansion(2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)gamma_expansion(100.0, 0.0), std::invalid_argument);
}

TEST_CASE("gamma_expansion: leading term dominates") {
  const double d = 1e8;
  CHECK(gamma_expansion(d, 0.5) ==
        doctest::Approx(std::sqrt(std::log(d))).epsilon(0.05));
}

// =============================================================================
// log_vol_grassmann / log_k / log_l
// =============================================================================

TEST_CASE("log_vol_grassmann: known small volumes") {
  // Real projective line: volume pi. Real projective plane: 2 pi.
  CHECK(std::exp(log_vol_grassmann(1, 2, Field::real)) ==
        doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(std::exp(log_vol_grassmann(1, 3, Field::real)) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  // Complex projective line: volume pi.
  CHECK(std::exp(log_vol_grassmann(1, 2, Field::complex)) ==
        doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("log_vol_grassmann: symmetric under p -> d-p") {
  CHECK(log_vol_grassmann(2, 7, Field::real) ==
        doctest::Approx(log_vol_grassmann(5, 7, Field::real)).epsilon(1e-12));
  CHECK(log_vol_grassmann(3, 8, Field::complex) ==
        doctest::Approx(log_vol_grassmann(5, 8, Field::complex)).epsilon(1e-12));
}

TEST_CASE("log_vol_grassmann: validates p") {
  CHECK_THROWS_AS((void)log_vol_grassmann(0, 5, Field::real),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)log_vol_grassmann(5, 5, Field::real),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)log_k(0, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)log_l(6, 6), std::invalid_argument);
}

TEST_CASE("log_k: normalized fixed-p limit") {
  const double limit = 0.5 * (1.0 + std::log(3.0));
  const double norm_2000 = log_k(3, 2000) / (3.0 * 1997.0);
  CHECK(std::abs(norm_2000 - limit) / limit < 0.01);
  // Convergence: the d=2000 value is closer to the limit than d=200.
  const double norm_200 = log_k(3, 200) / (3.0 * 197.0);
  CHECK(std::abs(norm_2000 - limit) < std::abs(norm_200 - limit));
}

TEST_CASE("log_l: normalized fixed-p limit") {
  // log L = 2 log K - p(d-p) log 2 up to lower-order terms (gamma
  // duplication), so the normalized limit sits (log 2)/2 below the real one.
  const double limit = 0.5 * (1.0 + std::log(3.0) - std::log(2.0));
  const double norm = log_l(3, 2000) / (2.0 * 3.0 * 1997.0);
  CHECK(std::abs(norm - limit) / limit < 0.01);
  const double log2_term = 3.0 * 1997.0 * std::log(2.0);
  CHECK(log_l(3, 2000) ==
        doctest::Approx(2.0 * log_k(3, 2000) - log2_term).epsilon(2e-3));
}

TEST_CASE("log_k: double-scaling value at alpha = 1/2") {
  const int d = 2000;
  const int p = 1000;
  const double norm = log_k(p, d) / (static_cast<double>(p) * (d - p));
  const double expected = beta(0.5) + 0.5 * std::log(static_cast<double>(d));
  CHECK(std::abs(norm - expected) / expected < 0.02);
}

TEST_CASE("log_k: no overflow at large dimension") {
  const double value = log_k(3, 100000);
  CHECK(std::isfinite(value));
  CHECK(value > 0.0);
}

// =============================================================================
// hs_mean_asymptotics
// =============================================================================

TEST_CASE("log_hs_mean_exact: falling-factorial values") {
  CHECK(log_hs_mean_exact(5, 2) == doctest::Approx(std::log(20.0)).epsilon(1e-13));
  CHECK(log_hs_mean_exact(8, 3) == doctest::Approx(std::log(336.0)).epsilon(1e-13));
  CHECK(log_hs_mean_exact(4, 0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK_THROWS_AS((void)log_hs_mean_exact(4, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)log_hs_mean_exact(4, -1), std::invalid_argument);
}

TEST_CASE("hs_mean_asymptotics: fixed order approximation") {
  const double approx = hs_mean_asymptotics(1e4, 3.0, AsymptoticRegime::fixed_order);
  const double exact = log_hs_mean_exact(10000, 3);
  CHECK(std::abs(approx - exact) / exact < 1e-3);
}

TEST_CASE("hs_mean_asymptotics: order one is exact") {
  CHECK(hs_mean_asymptotics(7.0, 1.0, AsymptoticRegime::fixed_order) ==
        doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(hs_mean_asymptotics(7.0, 1.0, AsymptoticRegime::fixed_order) ==
        doctest::Approx(log_hs_mean_exact(7, 1)).epsilon(1e-12));
}

TEST_CASE("hs_mean_asymptotics: double scaling at alpha = 1/2") {
  const double approx =
      hs_mean_asymptotics(1000.0, 0.5, AsymptoticRegime::double_scaling);
  const double exact = log_hs_mean_exact(1000, 500);
  CHECK(std::abs(approx - exact) / std::abs(exact) < 0.01);
}

TEST_CASE("hs_mean_asymptotics: validates arguments") {
  CHECK_THROWS_AS(
      (void)hs_mean_asymptotics(1.0, 2.0, AsymptoticRegime::fixed_order),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)hs_mean_asymptotics(100.0, -1.0, AsymptoticRegime::fixed_order),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)hs_mean_asymptotics(100.0, 0.0, AsymptoticRegime::double_scaling),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)hs_mean_asymptotics(100.0, 1.0, AsymptoticRegime::double_scaling),
      std::invalid_argument);
}

// =============================================================================
// Bound tables
// =============================================================================

TEST_CASE("bound_table_alpha: reference rows") {
  const BoundTable table = bound_table_alpha(2, 4);
  REQUIRE(table.columns == std::vector<std::string>{"p", "E0", "alpha"});
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0][0] == 2.0);
  CHECK(table.rows[0][1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  CHECK(std::abs(table.rows[0][2] - 2.0) < 1e-6);
  CHECK(std::abs(table.rows[1][2] - 2.870) < 0.005);
  CHECK(std::abs(table.rows[2][2] - 3.588) < 0.005);
  for (const auto& row : table.rows) {
    CHECK(row[1] > 0.0);
    CHECK(row[2] == doctest::Approx(std::sqrt(row[0]) * row[1]).epsilon(1e-14));
  }
}

TEST_CASE("bound_table_beta: symmetric columns on a uniform grid") {
  const BoundTable table = bound_table_beta(5, 0.1, 0.9);
  REQUIRE(table.columns ==
          std::vector<std::string>{"alpha", "beta", "beta_mirror"});
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows.front()[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(table.rows.back()[0] == doctest::Approx(0.9).epsilon(1e-14));
  for (const auto& row : table.rows) {
    CHECK(row[1] == doctest::Approx(beta(row[0])).epsilon(1e-14));
    CHECK(std::abs(row[1] - row[2]) < 1e-13);
  }
}

TEST_CASE("bound_table_gamma: rows match the root finder") {
  const BoundTable table = bound_table_gamma({100.0, 1e4}, 0.5);
  REQUIRE(table.columns ==
          std::vector<std::string>{"d", "alpha", "gamma", "gamma_expansion"});
  REQUIRE(table.rows.size() == 2);
  for (const auto& row : table.rows) {
    CHECK(row[1] == 0.5);
    CHECK(row[2] == doctest::Approx(gamma_alpha(row[0], 0.5)).epsilon(1e-12));
    CHECK(row[3] == doctest::Approx(gamma_expansion(row[0], 0.5)).epsilon(1e-12));
    CHECK(row[2] > 2.0);
  }
}

TEST_CASE("bound tables: builders validate their arguments") {
  CHECK_THROWS_AS((void)bound_table_alpha(1, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)bound_table_alpha(3, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)bound_table_beta(1), std::invalid_argument);
  CHECK_THROWS_AS((void)bound_table_beta(5, 0.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS((void)bound_table_gamma({}, 0.5), std::invalid_argument);
}

TEST_CASE("write_csv: header and full-precision rows") {
  BoundTable table;
  table.columns = {"a", "b"};
  table.rows = {{0.1, 1.0 / 3.0}, {2.0, 4.0}};
  std::ostringstream out;
  write_csv(table, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "a,b");
  REQUIRE(std::getline(in, line));
  const auto comma = line.find(',');
  REQUIRE(comma != std::string::npos);
  CHECK(std::stod(line.substr(0, comma)) == 0.1);
  CHECK(std::stod(line.substr(comma + 1)) == 1.0 / 3.0);
  REQUIRE(std::getline(in, line));
  CHECK(line == "2,4");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("save_csv: writes a file and reports failures") {
  const auto path =
      (std::filesystem::temp_directory_path() / "wedge_bound_table_test.csv")
          .string();
  const BoundTable table = bound_table_beta(3, 0.25, 0.75);
  save_csv(table, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "alpha,beta,beta_mirror");
  in.close();
  std::filesystem::remove(path);
  CHECK_THROWS_AS(save_csv(table, "/nonexistent-dir/table.csv"),
                  std::runtime_error);
}

}  // namespace
