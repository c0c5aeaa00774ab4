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

#include "oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/parallel.hpp"
#include "core/utility.hpp"

namespace apxeq {

namespace {

struct LocalBest {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t rank = FirstAcceptBound::kNone;
  std::vector<std::int64_t> counts;
};

}  // namespace

GridBest grid_best_response(const std::function<double(std::span<const double>)>& value_fn,
                            const ConvexStrategySpace& space, std::int64_t l,
                            int workers) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "grid search needs l >= 1");
  if (!value_fn) throw Error(ErrorCode::InvalidArgument, "value_fn must be set");
  const std::size_t n = space.vertex_count();
  const std::uint64_t total = composition_count(n, l);

  std::vector<LocalBest> best(static_cast<std::size_t>(std::max(workers, 1)));
  run_partitioned(total, workers, [&](int worker, IndexRange range) {
    LocalBest local;
    CompositionCursor cursor(n, l, range.begin);
    std::vector<double> weights(n);
    while (!cursor.done() && cursor.rank() < range.end) {
      const auto counts = cursor.counts();
      for (std::size_t i = 0; i < n; ++i)
        weights[i] = static_cast<double>(counts[i]) / static_cast<double>(l);
      const std::vector<double> point = space.point(weights);
      const double value = value_fn(point);
      // Strictly-greater keeps the earliest point among exact ties.
      if (value > local.value) {
        local.value = value;
        local.rank = cursor.rank();
        local.counts.assign(counts.begin(), counts.end());
      }
      cursor.advance();
    }
    best[static_cast<std::size_t>(worker)] = std::move(local);
  });

  LocalBest winner;
  for (const LocalBest& b : best) {
    if (b.rank == FirstAcceptBound::kNone) continue;
    if (b.value > winner.value ||
        (b.value == winner.value && b.rank < winner.rank)) {
      winner = b;
    }
  }
  if (winner.rank == FirstAcceptBound::kNone)
    throw Error(ErrorCode::InvalidArgument, "empty grid");
  return GridBest{CountVector{std::move(winner.counts), l}, winner.value};
}

GridBest grid_best_response(const std::function<double(const MixedStrategy&)>& value_fn,
                            std::size_t n, std::int64_t l, int workers) {
  const ConvexStrategySpace space = ConvexStrategySpace::simplex(n);
  return grid_best_response(
      [&](std::span<const double> point) {
        return value_fn(MixedStrategy::normalized(
            std::vector<double>(point.begin(), point.end())));
      },
      space, l, workers);
}

MixedStrategy exhaustive_quadratic_br(std::span<const double> payoffs,
                                      std::span<const double> base, double d) {
  const std::size_t n = payoffs.size();
  if (n == 0 || base.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (n > 20)
    throw Error(ErrorCode::InvalidArgument, "support enumeration guarded to n <= 20");
  if (!(d > 0.0))
    throw Error(ErrorCode::InvalidArgument, "support enumeration needs d > 0");

  std::vector<double> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = payoffs[i] + 2.0 * d * base[i];

  double best_utility = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  std::vector<double> x(n);
  const std::uint32_t masks = 1u << n;
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    double alpha_sum = 0.0;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        alpha_sum += alpha[i];
        ++support;
      }
    const double lambda = (alpha_sum - 2.0 * d) / static_cast<double>(support);
    bool feasible = true;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        double v = (alpha[i] - lambda) / (2.0 * d);
        if (v < -1e-12) {
          feasible = false;
          break;
        }
        v = std::max(v, 0.0);
        x[i] = v;
        sum += v;
      } else {
        x[i] = 0.0;
      }
    }
    if (!feasible || sum <= 0.0) continue;
    for (double& v : x) v /= sum;
    double utility = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = x[i] - base[i];
      utility += x[i] * payoffs[i] - d * dev * dev;
    }
    if (utility > best_utility) {
      best_utility = utility;
      best_x = x;
    }
  }
  return MixedStrategy::normalized(std::move(best_x));
}

VerifyOutcome verify_epsilon_equilibrium(std::span<const double> utilities,
                                         std::span<const double> br_values,
                                         double epsilon) {
  if (utilities.size() != br_values.size() || utilities.empty())
    throw Error(ErrorCode::DimensionMismatch, "one best-response value per player");
  VerifyOutcome out;
  out.holds = true;
  double worst = -1.0;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    const double gap = regret_value(br_values[i], utilities[i]);
    if (gap > worst) {
      worst = gap;
      out.player = i;
      out.gap = gap;
    }
    if (gap > epsilon + 1e-9) out.holds = false;
  }
  return out;
}

VerifyOutcome verify_epsilon_equilibrium(const DistanceBiasedGame& g,
                                         const MixedStrategy& x, const MixedStrategy& y,
                                         double epsilon,
                                         std::span<const double> br_values) {
  const double utilities[2] = {utility_biased(g, x, y, Player::Row),
                               utility_biased(g, x, y, Player::Col)};
  return verify_epsilon_equilibrium(utilities, br_values, epsilon);
}

}  // namespace apxeq
