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

#include "gen/random_game.hpp"

#include <cmath>
#include <vector>

namespace apxeq {

MixedStrategy random_simplex_point(SplitMix64& rng, std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -std::log(rng.next_open());
  return MixedStrategy::normalized(std::move(w));
}

DistanceBiasedGame generate_random_game(std::size_t n, NormKind norm_row,
                                        NormKind norm_col, double d_row, double d_col,
                                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> r(n * n), c(n * n);
  for (double& v : r) v = rng.next_unit();
  for (double& v : c) v = rng.next_unit();
  MixedStrategy base_row = random_simplex_point(rng, n);
  MixedStrategy base_col = random_simplex_point(rng, n);
  return DistanceBiasedGame(
      BimatrixGame(SquareMatrix(n, std::move(r)), SquareMatrix(n, std::move(c))),
      std::move(base_row), std::move(base_col), norm_row, norm_col, d_row, d_col);
}

}  // namespace apxeq
