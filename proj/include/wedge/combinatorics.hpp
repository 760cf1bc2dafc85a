// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinatorics.hpp
 * @brief Ranking, unranking and iteration of strictly increasing index tuples.
 *
 * A p-subset of {1, ..., d} is stored as a sorted 1-based tuple and addressed
 * by its 0-based lexicographic rank among all C(d, p) such tuples. These
 * tuples index the independent coefficients of an antisymmetric tensor.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

// =============================================================================
// Binomial coefficients
// =============================================================================

/** @brief C(n, k) in exact 64-bit arithmetic; 0 when k > n. */
[[nodiscard]] inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial: negative argument n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  // Multiply/divide alternately so every intermediate value is an exact
  // binomial coefficient and stays within range for all sizes used here.
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

// =============================================================================
// Combination indexing
// =============================================================================

/** @brief A sorted 1-based index tuple together with its lexicographic rank. */
struct CombIndex {
  std::vector<int> tuple;  ///< strictly increasing entries in [1, d]
  std::uint64_t rank = 0;  ///< 0-based lexicographic rank among C(d, p) tuples
};

namespace detail {

/** @brief Throws unless `tuple` is strictly increasing inside [1, d]. */
inline void check_tuple(int d, const std::vector<int>& tuple) {
  int prev = 0;
  for (const int t : tuple) {
    if (t <= prev || t > d) {
      throw std::invalid_argument(
          "tuple must be strictly increasing within [1, " + std::to_string(d) +
          "]");
    }
    prev = t;
  }
}

}  // namespace detail

/**
 * @brief 0-based lexicographic rank of a strictly increasing 1-based tuple.
 *
 * Counts the tuples that precede `tuple` in lexicographic order, i.e. for each
 * position the number of completions below the chosen entry.
 */
[[nodiscard]] inline std::uint64_t rank_tuple(int d,
                                              const std::vector<int>& tuple) {
  detail::check_tuple(d, tuple);
  const int p = static_cast<int>(tuple.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < tuple[i]; ++v) {
      rank += binomial(d - v, p - 1 - i);
    }
    prev = tuple[i];
  }
  return rank;
}

/** @brief Inverse of rank_tuple: the rank-th tuple in lexicographic order. */
[[nodiscard]] inline std::vector<int> unrank_tuple(int d, int p,
                                                   std::uint64_t rank) {
  if (p < 0 || p > d) {
    throw std::invalid_argument("unrank_tuple: need 0 <= p <= d, got p=" +
                                std::to_string(p) + " d=" + std::to_string(d));
  }
  if (rank >= binomial(d, p)) {
    throw std::invalid_argument("unrank_tuple: rank " + std::to_string(rank) +
                                " out of range for C(" + std::to_string(d) +
                                ", " + std::to_string(p) + ")");
  }
  std::vector<int> tuple(static_cast<std::size_t>(p));
  int v = 1;
  for (int i = 0; i < p; ++i) {
    // Greedily take the smallest admissible entry at each position.
    for (;; ++v) {
      const std::uint64_t block = binomial(d - v, p - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    tuple[static_cast<std::size_t>(i)] = v;
    ++v;
  }
  return tuple;
}

/** @brief Bundles a tuple with its rank. */
[[nodiscard]] inline CombIndex make_comb_index(int d,
                                               const std::vector<int>& tuple) {
  return CombIndex{tuple, rank_tuple(d, tuple)};
}

/**
 * @brief Advances `tuple` to its lexicographic successor in place.
 * @return false when `tuple` was the last combination (it is left unchanged).
 */
inline bool next_tuple(int d, std::vector<int>& tuple) {
  const int p = static_cast<int>(tuple.size());
  for (int i = p - 1; i >= 0; --i) {
    if (tuple[static_cast<std::size_t>(i)] < d - (p - 1 - i)) {
      ++tuple[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < p; ++j) {
        tuple[static_cast<std::size_t>(j)] =
            tuple[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

// =============================================================================
// Permutation parity
// =============================================================================

/**
 * @brief Sorts `indices` ascending and returns the parity of the sort.
 * @return +1 for an even permutation, -1 for odd, 0 if entries repeat.
 */
[[nodiscard]] inline int sort_with_sign(std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  int sign = 1;
  // Insertion sort; each swap of adjacent elements flips the parity.
  for (int i = 1; i < n; ++i) {
    const int value = indices[static_cast<std::size_t>(i)];
    int j = i - 1;
    while (j >= 0 && indices[static_cast<std::size_t>(j)] > value) {
      indices[static_cast<std::size_t>(j + 1)] =
          indices[static_cast<std::size_t>(j)];
      --j;
      sign = -sign;
    }
    indices[static_cast<std::size_t>(j + 1)] = value;
  }
  for (int i = 1; i < n; ++i) {
    if (indices[static_cast<std::size_t>(i)] ==
        indices[static_cast<std::size_t>(i - 1)]) {
      return 0;
    }
  }
  return sign;
}

/** @brief Parity of the permutation `perm` of {1, ..., n}; +1 even, -1 odd. */
[[nodiscard]] inline int permutation_sign(std::vector<int> perm) {
  const int sign = sort_with_sign(perm);
  if (sign == 0) {
    throw std::invalid_argument("permutation_sign: repeated entries");
  }
  return sign;
}

}  // namespace wedge
