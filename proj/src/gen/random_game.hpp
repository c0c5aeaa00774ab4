// Copyright 2026 The apxeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Seeded game ensembles. The generator is SplitMix64 (Steele, Lea &
// Flood's 64-bit mixer), chosen so streams can be reproduced bit-exactly
// from the seed in any language. Draw order for a game: all of R row-major,
// all of C row-major, the row base, then the column base; bases are drawn
// uniformly from the simplex via exponential normalization.

#ifndef APXEQ_GEN_RANDOM_GAME_HPP
#define APXEQ_GEN_RANDOM_GAME_HPP

#include <cstdint>

#include "core/types.hpp"

namespace apxeq {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t step(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept { return step(state_); }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1); safe to feed into log().
  double next_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform double in (lo, hi).
  double next_in(double lo, double hi) noexcept {
    return lo + next_open() * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

MixedStrategy random_simplex_point(SplitMix64& rng, std::size_t n);

/// Payoffs i.i.d. uniform on [0,1), bases uniform on the simplex,
/// deterministic in the seed.
DistanceBiasedGame generate_random_game(std::size_t n, NormKind norm_row,
                                        NormKind norm_col, double d_row, double d_col,
                                        std::uint64_t seed);

}  // namespace apxeq

#endif  // APXEQ_GEN_RANDOM_GAME_HPP
