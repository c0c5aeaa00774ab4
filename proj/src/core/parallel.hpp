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
// Deterministic worker partitioning. Work is always split into contiguous
// index ranges and reductions break ties toward the lowest global index, so
// every result is independent of the worker count and of thread scheduling.

#ifndef APXEQ_CORE_PARALLEL_HPP
#define APXEQ_CORE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace apxeq {

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  bool empty() const noexcept { return begin >= end; }
};

std::vector<IndexRange> split_range(std::uint64_t total, int workers);

/// Runs fn(worker_id, range) on each nonempty range; worker 0 runs on the
/// calling thread. fn must not throw across threads unguarded; wrap and
/// rethrow the first error by range order.
template <typename Fn>
void run_partitioned(std::uint64_t total, int workers, Fn&& fn) {
  const std::vector<IndexRange> ranges = split_range(total, workers);
  if (ranges.size() <= 1) {
    if (!ranges.empty()) fn(0, ranges[0]);
    return;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  std::vector<std::thread> threads;
  threads.reserve(ranges.size() - 1);
  for (std::size_t w = 1; w < ranges.size(); ++w) {
    threads.emplace_back([&, w] {
      try {
        fn(static_cast<int>(w), ranges[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    fn(0, ranges[0]);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Evaluates fn(i) for i in [0,total) with results collected by index.
template <typename Fn>
void parallel_for_index(std::uint64_t total, int workers, Fn&& fn) {
  run_partitioned(total, workers, [&](int, IndexRange range) {
    for (std::uint64_t i = range.begin; i < range.end; ++i) fn(i);
  });
}

/// Shared lower bound for first-accept scans: workers visit ascending
/// indices and may skip anything above the smallest accepted index so far.
class FirstAcceptBound {
 public:
  std::uint64_t load() const noexcept { return best_.load(std::memory_order_relaxed); }
  void accept(std::uint64_t index) noexcept {
    std::uint64_t cur = best_.load(std::memory_order_relaxed);
    while (index < cur &&
           !best_.compare_exchange_weak(cur, index, std::memory_order_relaxed)) {
    }
  }
  bool found() const noexcept { return load() != kNone; }
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

 private:
  std::atomic<std::uint64_t> best_{kNone};
};

}  // namespace apxeq

#endif  // APXEQ_CORE_PARALLEL_HPP
