// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_combinatorics.cpp
 * @brief Tests for tuple ranking, iteration and permutation parity.
 */

#include "wedge/combinatorics.hpp"

#include <doctest.h>

#include <cstdint>
#include <vector>

namespace {

using wedge::binomial;
using wedge::next_tuple;
using wedge::permutation_sign;
using wedge::rank_tuple;
using wedge::sort_with_sign;
using wedge::unrank_tuple;

// =============================================================================
// binomial
// =============================================================================

TEST_CASE("binomial: small table and edge cases") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(60, 3) == 34220);
  CHECK(binomial(70, 4) == 916895);
  CHECK(binomial(5, 7) == 0);
  // Pascal rule on a grid.
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
  CHECK_THROWS_AS((void)binomial(-1, 0), std::invalid_argument);
}

// =============================================================================
// rank_tuple / unrank_tuple
// =============================================================================

TEST_CASE("rank_tuple: lexicographic table at d=4, p=2") {
  // All six pairs in order: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
  CHECK(rank_tuple(4, {1, 2}) == 0);
  CHECK(rank_tuple(4, {1, 3}) == 1);
  CHECK(rank_tuple(4, {1, 4}) == 2);
  CHECK(rank_tuple(4, {2, 3}) == 3);
  CHECK(rank_tuple(4, {2, 4}) == 4);
  CHECK(rank_tuple(4, {3, 4}) == 5);
}

TEST_CASE("rank_tuple: singletons shift by one") {
  CHECK(rank_tuple(5, {3}) == 2);
  CHECK(rank_tuple(5, {1}) == 0);
  CHECK(rank_tuple(5, {5}) == 4);
}

TEST_CASE("rank_tuple: d=6, p=3 against brute-force enumeration") {
  // Independent enumeration with plain nested loops.
  std::vector<std::vector<int>> all;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) all.push_back({a, b, c});
  REQUIRE(all.size() == 20);
  for (std::size_t r = 0; r < all.size(); ++r) {
    CHECK(rank_tuple(6, all[r]) == r);
    CHECK(unrank_tuple(6, 3, r) == all[r]);
  }
  CHECK(rank_tuple(6, {2, 4, 6}) == 14);
}

TEST_CASE("rank/unrank: bijection over several shapes") {
  for (const auto [d, p] :
       {std::pair{5, 2}, {7, 3}, {8, 4}, {9, 1}, {6, 5}, {6, 6}}) {
    const std::uint64_t total = binomial(d, p);
    std::vector<int> walker;
    for (int i = 1; i <= p; ++i) walker.push_back(i);
    for (std::uint64_t r = 0; r < total; ++r) {
      const auto tuple = unrank_tuple(d, p, r);
      CHECK(tuple == walker);
      CHECK(rank_tuple(d, tuple) == r);
      const bool more = next_tuple(d, walker);
      CHECK(more == (r + 1 < total));
    }
  }
}

TEST_CASE("rank/unrank: rejects malformed input") {
  CHECK_THROWS_AS((void)rank_tuple(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)rank_tuple(4, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)rank_tuple(4, {1, 5}), std::invalid_argument);
  CHECK_THROWS_AS((void)rank_tuple(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)unrank_tuple(4, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS((void)unrank_tuple(4, 5, 0), std::invalid_argument);
}

// =============================================================================
// Permutation parity
// =============================================================================

TEST_CASE("sort_with_sign: parity and duplicate detection") {
  std::vector<int> a{3, 1, 2};  // even 3-cycle
  CHECK(sort_with_sign(a) == 1);
  CHECK(a == std::vector<int>{1, 2, 3});

  std::vector<int> b{2, 1};  // single transposition
  CHECK(sort_with_sign(b) == -1);

  std::vector<int> c{2, 2};
  CHECK(sort_with_sign(c) == 0);

  std::vector<int> d{1, 2, 3, 4};
  CHECK(sort_with_sign(d) == 1);
}

TEST_CASE("permutation_sign: agrees with inversion count") {
  CHECK(permutation_sign({1, 3, 4, 2}) == 1);   // two inversions
  CHECK(permutation_sign({4, 3, 2, 1}) == 1);   // six inversions
  CHECK(permutation_sign({2, 1, 3, 4}) == -1);  // one inversion
  CHECK_THROWS_AS((void)permutation_sign({1, 1, 2}), std::invalid_argument);
}

}  // namespace
