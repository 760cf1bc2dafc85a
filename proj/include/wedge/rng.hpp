// Copyright 2026 The Wedge Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rng.hpp
 * @brief Counter-based SplitMix64 generator with deterministic stream splitting.
 *
 * Every stochastic routine takes an explicit 64-bit seed and derives private
 * streams with derive_stream(), so trials and restarts can run in any order
 * (or concurrently) and still reproduce bit-identical results within this
 * implementation. Across implementations only statistical agreement is
 * promised.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace wedge {

// =============================================================================
// SplitMix64
// =============================================================================

/**
 * @brief SplitMix64: a counter advanced by a fixed odd constant, then mixed
 * through an avalanching finalizer. Equidistributed over 64-bit outputs and
 * trivially splittable by seeding disjoint counters.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /** @brief Next raw 64-bit output. */
  [[nodiscard]] std::uint64_t next_u64() noexcept {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /** @brief Uniform double in [0, 1) with 53 random bits. */
  [[nodiscard]] double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /** @brief Standard normal via Box-Muller; generates pairs, caches one. */
  [[nodiscard]] double normal() noexcept {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    // Box-Muller on (0,1] x [0,1): shift the first uniform away from zero.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  /** @brief Standard complex normal: E|z|^2 = 1, independent Re/Im. */
  [[nodiscard]] std::complex<double> normal_complex() noexcept {
    const double re = normal();
    const double im = normal();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr double kInvSqrt2 = 0.70710678118654752440;

  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// =============================================================================
// Stream derivation
// =============================================================================

/**
 * @brief Derives the seed of an independent substream.
 *
 * Mixes the stream index through the SplitMix64 finalizer with a distinct odd
 * multiplier, so derive_stream(s, i) and derive_stream(s, j) decorrelate for
 * i != j and never collide with the raw seed's own counter sequence.
 */
[[nodiscard]] inline std::uint64_t derive_stream(std::uint64_t seed,
                                                 std::uint64_t stream) noexcept {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (2 * stream + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace wedge
