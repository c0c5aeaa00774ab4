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

#include "uniform/composition.hpp"

#include <limits>

#include "core/parallel.hpp"

namespace apxeq {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::int64_t>::max();
}

MixedStrategy CountVector::to_strategy() const {
  if (k <= 0)
    throw Error(ErrorCode::InvalidArgument,
                "cannot normalize a 0-uniform count vector to a strategy");
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(k);
  return MixedStrategy::normalized(std::move(probs));
}

std::vector<double> CountVector::weights() const {
  if (k <= 0)
    throw Error(ErrorCode::InvalidArgument,
                "cannot normalize a 0-uniform count vector");
  std::vector<double> w(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    w[i] = static_cast<double>(counts[i]) / static_cast<double>(k);
  return w;
}

std::vector<double> CountVector::to_point(const ConvexStrategySpace& space) const {
  const std::vector<double> w = weights();
  return space.point(w);
}

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t composition_count(std::size_t n, std::int64_t k) noexcept {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 0) return 0;
  return binomial_saturated(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k) - 1,
                            static_cast<std::uint64_t>(k));
}

CompositionCursor::CompositionCursor(std::size_t n, std::int64_t k,
                                     std::uint64_t start_rank)
    : n_(n), k_(k), counts_(n, 0) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "enumeration needs n >= 1");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "enumeration needs k >= 0");
  total_ = composition_count(n, k);
  if (total_ == kSaturated)
    throw Error(ErrorCode::CapExceeded, "composition stream too large to rank");
  rank_ = start_rank;
  if (rank_ >= total_) {
    done_ = true;
    return;
  }
  // Unrank: fix counts position by position; putting value v at position
  // pos skips composition_count(remaining - v, parts below) entries for
  // every larger v tried first.
  std::uint64_t remaining_rank = rank_;
  std::int64_t remaining = k;
  for (std::size_t pos = 0; pos + 1 < n_; ++pos) {
    for (std::int64_t v = remaining; v >= 0; --v) {
      const std::uint64_t block = composition_count(n_ - pos - 1, remaining - v);
      if (remaining_rank < block) {
        counts_[pos] = v;
        remaining -= v;
        break;
      }
      remaining_rank -= block;
    }
  }
  counts_[n_ - 1] = remaining;
}

void CompositionCursor::advance() {
  if (done_) return;
  ++rank_;
  if (rank_ >= total_) {
    done_ = true;
    return;
  }
  // Successor in lex-decreasing order: take one unit from the rightmost
  // nonzero position before the tail, push the tail plus that unit one slot
  // right, and clear everything after.
  const std::int64_t tail = counts_[n_ - 1];
  std::size_t j = n_ - 1;
  while (j > 0 && counts_[j - 1] == 0) --j;
  --j;  // rank_ < total_ guarantees a nonzero position exists before the tail
  counts_[j] -= 1;
  counts_[j + 1] = tail + 1;
  for (std::size_t t = j + 2; t < n_; ++t) counts_[t] = 0;
}

std::vector<CountVector> enumerate_k_uniform(std::size_t n, std::int64_t k) {
  return enumerate_k_uniform_slice(n, k, 0, 1);
}

std::vector<CountVector> enumerate_k_uniform_slice(std::size_t n, std::int64_t k,
                                                   int worker, int workers) {
  if (workers < 1 || worker < 0 || worker >= workers)
    throw Error(ErrorCode::InvalidArgument, "invalid worker slice");
  const std::uint64_t total = composition_count(n, k);
  if (total == kSaturated)
    throw Error(ErrorCode::CapExceeded, "composition stream too large to materialize");
  const auto ranges = split_range(total, workers);
  std::vector<CountVector> out;
  if (static_cast<std::size_t>(worker) >= ranges.size()) return out;
  const IndexRange range = ranges[static_cast<std::size_t>(worker)];
  out.reserve(static_cast<std::size_t>(range.end - range.begin));
  CompositionCursor cursor(n, k, range.begin);
  while (!cursor.done() && cursor.rank() < range.end) {
    out.push_back(cursor.count_vector());
    cursor.advance();
  }
  return out;
}

}  // namespace apxeq
