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
// Enumeration of k-uniform strategies as integer compositions of k into n
// parts, in lexicographically decreasing order of the count vectors. The
// stream supports exact ranking, so any contiguous sub-range can be handed
// to a worker and the union over workers reproduces the full stream in the
// same global order.

#ifndef APXEQ_UNIFORM_COMPOSITION_HPP
#define APXEQ_UNIFORM_COMPOSITION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace apxeq {

/// n nonnegative integer counts summing to exactly k; counts/k is the
/// k-uniform strategy the vector denotes.
struct CountVector {
  std::vector<std::int64_t> counts;
  std::int64_t k = 0;

  /// counts/k as a simplex point. Errors for k = 0 (cannot normalize).
  MixedStrategy to_strategy() const;
  /// Vertex-weighted point sum (counts_j/k) * y_j of the given space.
  std::vector<double> to_point(const ConvexStrategySpace& space) const;
  std::vector<double> weights() const;
};

/// C(n,k) saturated at 2^63-1; all composition counts go through this.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) noexcept;

/// Number of compositions of k into n parts, C(n+k-1, k), saturated.
std::uint64_t composition_count(std::size_t n, std::int64_t k) noexcept;

/// Forward iterator over the composition stream of one (n, k) pair.
/// Construction seeks directly to any rank, in O(n*k) time.
class CompositionCursor {
 public:
  CompositionCursor(std::size_t n, std::int64_t k, std::uint64_t start_rank = 0);

  bool done() const noexcept { return done_; }
  std::uint64_t rank() const noexcept { return rank_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  CountVector count_vector() const { return CountVector{counts_, k_}; }
  void advance();

 private:
  std::size_t n_;
  std::int64_t k_;
  std::vector<std::int64_t> counts_;
  std::uint64_t rank_ = 0;
  std::uint64_t total_ = 0;
  bool done_ = false;
};

/// Full stream for one worker's contiguous slice: worker w of W receives
/// ranks [w*total/W .. (w+1)*total/W) of the global order.
std::vector<CountVector> enumerate_k_uniform(std::size_t n, std::int64_t k);
std::vector<CountVector> enumerate_k_uniform_slice(std::size_t n, std::int64_t k,
                                                   int worker, int workers);

}  // namespace apxeq

#endif  // APXEQ_UNIFORM_COMPOSITION_HPP
