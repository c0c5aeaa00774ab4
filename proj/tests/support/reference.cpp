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

#include "support/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <vector>

#include "core/utility.hpp"

namespace apxeq::testing {

namespace {

double coordinate_penalty(double t, double base, NormKind norm) {
  switch (norm) {
    case NormKind::L1: return std::abs(t - base);
    case NormKind::L2Sq: {
      const double d = t - base;
      return d * d;
    }
    case NormKind::Inner: return t * t;
    case NormKind::LInf: break;
  }
  throw Error(ErrorCode::InvalidArgument, "not a separable norm");
}

double value_of_counts(std::span<const std::int64_t> counts,
                       std::span<const double> payoffs, std::span<const double> base,
                       double d, NormKind norm, std::int64_t l) {
  std::vector<double> x(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    x[i] = static_cast<double>(counts[i]) / static_cast<double>(l);
  return dot(x, payoffs) - d * penalty_value(x, base, norm);
}

double separable_max(std::span<const double> payoffs, std::span<const double> base,
                     double d, NormKind norm, std::int64_t l) {
  const std::size_t n = payoffs.size();
  auto term = [&](std::size_t i, std::int64_t c) {
    const double t = static_cast<double>(c) / static_cast<double>(l);
    return payoffs[i] * t - d * coordinate_penalty(t, base[i], norm);
  };
  // Marginal gains are nonincreasing in c (the terms are concave), so the
  // greedy unit-by-unit allocation reaches the exact integer optimum.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> queue;
  std::vector<std::int64_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) queue.push({term(i, 1) - term(i, 0), i});
  for (std::int64_t unit = 0; unit < l; ++unit) {
    const auto [gain, i] = queue.top();
    queue.pop();
    counts[i] += 1;
    if (counts[i] < l) queue.push({term(i, counts[i] + 1) - term(i, counts[i]), i});
  }
  return value_of_counts(counts, payoffs, base, d, norm, l);
}

double linf_max(std::span<const double> payoffs, std::span<const double> base, double d,
                std::int64_t l) {
  const std::size_t n = payoffs.size();
  const double ld = static_cast<double>(l);

  std::vector<double> thresholds;
  thresholds.reserve(n * static_cast<std::size_t>(l + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t c = 0; c <= l; ++c)
      thresholds.push_back(std::abs(static_cast<double>(c) / ld - base[i]));
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<std::size_t> by_payoff(n);
  std::iota(by_payoff.begin(), by_payoff.end(), std::size_t{0});
  std::stable_sort(by_payoff.begin(), by_payoff.end(),
                   [&](std::size_t a, std::size_t b) { return payoffs[a] > payoffs[b]; });

  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> lo(n), hi(n);
  for (const double t : thresholds) {
    std::int64_t lo_sum = 0, hi_sum = 0;
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::max<std::int64_t>(
          0, static_cast<std::int64_t>(std::ceil(ld * (base[i] - t) - 1e-9)));
      hi[i] = std::min<std::int64_t>(
          l, static_cast<std::int64_t>(std::floor(ld * (base[i] + t) + 1e-9)));
      if (lo[i] > hi[i]) {
        feasible = false;
        break;
      }
      lo_sum += lo[i];
      hi_sum += hi[i];
    }
    if (!feasible || lo_sum > l || hi_sum < l) continue;
    std::int64_t leftover = l - lo_sum;
    double lin = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      lin += static_cast<double>(lo[i]) / ld * payoffs[i];
    for (std::size_t idx : by_payoff) {
      if (leftover == 0) break;
      const std::int64_t add = std::min(leftover, hi[idx] - lo[idx]);
      lin += static_cast<double>(add) / ld * payoffs[idx];
      leftover -= add;
    }
    best = std::max(best, lin - d * t);
  }
  return best;
}

}  // namespace

double grid_reference_max(std::span<const double> payoffs, std::span<const double> base,
                          double d, NormKind norm, std::int64_t l) {
  if (payoffs.size() != base.size() || payoffs.empty())
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
  if (norm == NormKind::LInf) return linf_max(payoffs, base, d, l);
  return separable_max(payoffs, base, d, norm, l);
}

}  // namespace apxeq::testing
