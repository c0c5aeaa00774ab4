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

#include "lipschitz/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "core/parallel.hpp"
#include "core/utility.hpp"
#include "uniform/composition.hpp"
#include "uniform/selectors.hpp"

namespace apxeq {

namespace {

constexpr std::uint64_t kCacheEntryCap = 8u << 20;

/// Max of the player's utility over their l-uniform grid, all other
/// coordinates of the profile held fixed. scratch must alias profile
/// contents and is restored before returning.
double best_grid_reply(const LipschitzGame& g, std::size_t player,
                       std::vector<std::vector<double>>& scratch, std::int64_t l,
                       int workers) {
  const ConvexStrategySpace& space = g.spaces[player];
  const std::size_t n = space.vertex_count();
  const std::uint64_t total = composition_count(n, l);
  std::vector<double> local(static_cast<std::size_t>(std::max(workers, 1)),
                            -std::numeric_limits<double>::infinity());
  if (workers <= 1) {
    CompositionCursor cursor(n, l, 0);
    std::vector<double> weights(n);
    double best = -std::numeric_limits<double>::infinity();
    const std::vector<double> saved = scratch[player];
    while (!cursor.done()) {
      const auto counts = cursor.counts();
      for (std::size_t i = 0; i < n; ++i)
        weights[i] = static_cast<double>(counts[i]) / static_cast<double>(l);
      scratch[player] = space.point(weights);
      best = std::max(best, g.utilities[player](scratch));
      cursor.advance();
    }
    scratch[player] = saved;
    return best;
  }
  const std::vector<std::vector<double>> frozen(scratch.begin(), scratch.end());
  run_partitioned(total, workers, [&](int worker, IndexRange range) {
    std::vector<std::vector<double>> profile = frozen;
    CompositionCursor cursor(n, l, range.begin);
    std::vector<double> weights(n);
    double best = -std::numeric_limits<double>::infinity();
    while (!cursor.done() && cursor.rank() < range.end) {
      const auto counts = cursor.counts();
      for (std::size_t i = 0; i < n; ++i)
        weights[i] = static_cast<double>(counts[i]) / static_cast<double>(l);
      profile[player] = space.point(weights);
      best = std::max(best, g.utilities[player](profile));
      cursor.advance();
    }
    local[static_cast<std::size_t>(worker)] = best;
  });
  return *std::max_element(local.begin(), local.end());
}

}  // namespace

GuaranteeDetail evaluate_guarantee_detail(const LipschitzGame& g,
                                          std::span<const std::vector<double>> profile,
                                          double delta, int workers) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (profile.size() != g.players())
    throw Error(ErrorCode::DimensionMismatch, "one strategy point per player required");
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i].size() != g.spaces[i].dimension())
      throw Error(ErrorCode::DimensionMismatch, "profile point dimension mismatch");

  const std::int64_t l =
      l_for_regret(g.lipschitz_lambda, g.norm_exponent, g.gamma, delta);
  std::vector<std::vector<double>> scratch(profile.begin(), profile.end());

  GuaranteeDetail detail;
  detail.regrets.resize(g.players());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.players(); ++i) {
    const double actual = g.utilities[i](scratch);
    const double reply = best_grid_reply(g, i, scratch, l, workers);
    detail.regrets[i] = regret_value(reply, actual);
    worst = std::max(worst, detail.regrets[i]);
  }
  detail.alpha = delta + worst;
  return detail;
}

double evaluate_guarantee(const LipschitzGame& g,
                          std::span<const std::vector<double>> profile, double delta,
                          int workers) {
  return evaluate_guarantee_detail(g, profile, delta, workers).alpha;
}

LipschitzVerdict find_equilibrium(const LipschitzGame& g, double epsilon,
                                  const SearchOptions& options) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const auto started = std::chrono::steady_clock::now();
  const std::size_t players = g.players();
  const std::int64_t k =
      options.k_override.value_or(k_for_lipschitz(static_cast<double>(players),
                                                  g.lipschitz_lambda, g.norm_exponent,
                                                  g.gamma, epsilon));
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  const std::int64_t l =
      l_for_regret(g.lipschitz_lambda, g.norm_exponent, g.gamma, epsilon);

  std::vector<std::uint64_t> strategy_counts(players);
  double profiles_d = 1.0;
  double max_scan = 0.0;
  for (std::size_t i = 0; i < players; ++i) {
    strategy_counts[i] = composition_count(g.spaces[i].vertex_count(), k);
    profiles_d *= static_cast<double>(strategy_counts[i]);
    max_scan = std::max(max_scan,
                        static_cast<double>(composition_count(g.spaces[i].vertex_count(), l)));
  }
  const double projected = profiles_d * max_scan;
  if (!(projected <= options.budget))
    throw Error(ErrorCode::BudgetExceeded,
                "projected work " + std::to_string(projected) + " utility evaluations exceeds budget " +
                    std::to_string(options.budget) + "; shrink the game, raise epsilon, or override k");
  if (!(profiles_d < 9e18))
    throw Error(ErrorCode::BudgetExceeded, "profile count exceeds the enumerable range");

  const auto total_profiles = static_cast<std::uint64_t>(profiles_d);

  // Approximate best-reply values are cached per (player, opponent
  // sub-profile): the value does not depend on the player's own coordinate,
  // and the profile scan revisits each sub-profile many times.
  std::vector<std::uint64_t> opponent_counts(players);
  std::uint64_t cache_entries = 0;
  for (std::size_t i = 0; i < players; ++i) {
    opponent_counts[i] = total_profiles / strategy_counts[i];
    cache_entries += opponent_counts[i];
  }
  if (cache_entries > kCacheEntryCap)
    throw Error(ErrorCode::BudgetExceeded,
                "best-reply cache would need " + std::to_string(cache_entries) +
                    " entries; raise epsilon or override k");

  // Strategy points per player per rank, materialized once.
  std::vector<std::vector<std::vector<double>>> points(players);
  for (std::size_t i = 0; i < players; ++i) {
    const std::size_t n = g.spaces[i].vertex_count();
    points[i].resize(strategy_counts[i]);
    CompositionCursor cursor(n, k, 0);
    std::vector<double> weights(n);
    while (!cursor.done()) {
      const auto counts = cursor.counts();
      for (std::size_t j = 0; j < n; ++j)
        weights[j] = static_cast<double>(counts[j]) / static_cast<double>(k);
      points[i][cursor.rank()] = g.spaces[i].point(weights);
      cursor.advance();
    }
  }

  // Ranks of every player except `player`, decoded from the opponent
  // sub-profile index (mixed radix, lower-numbered players most
  // significant).
  auto decode_opponents = [&](std::size_t player, std::uint64_t opp_index,
                              std::vector<std::uint64_t>& ranks) {
    for (std::size_t j = players; j-- > 0;) {
      if (j == player) continue;
      ranks[j] = opp_index % strategy_counts[j];
      opp_index /= strategy_counts[j];
    }
  };
  auto opponent_index_of = [&](std::size_t player,
                               std::span<const std::uint64_t> ranks) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < players; ++j) {
      if (j == player) continue;
      idx = idx * strategy_counts[j] + ranks[j];
    }
    return idx;
  };

  std::vector<std::vector<double>> reply_cache(players);
  for (std::size_t i = 0; i < players; ++i) {
    reply_cache[i].assign(opponent_counts[i], 0.0);
    parallel_for_index(opponent_counts[i], options.workers, [&](std::uint64_t o) {
      std::vector<std::uint64_t> ranks(players, 0);
      decode_opponents(i, o, ranks);
      std::vector<std::vector<double>> scratch(players);
      for (std::size_t j = 0; j < players; ++j)
        scratch[j] = points[j][j == i ? 0 : ranks[j]];
      reply_cache[i][o] = best_grid_reply(g, i, scratch, l, 1);
    });
  }

  const double threshold = 2.0 * epsilon;
  FirstAcceptBound bound;
  run_partitioned(total_profiles, options.workers, [&](int, IndexRange range) {
    std::vector<std::uint64_t> ranks(players);
    std::vector<std::vector<double>> scratch(players);
    for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
      if (options.lexicographic_first) {
        if (idx > bound.load()) break;
      } else if (bound.found()) {
        break;
      }
      std::uint64_t rest = idx;
      for (std::size_t j = players; j-- > 0;) {
        ranks[j] = rest % strategy_counts[j];
        rest /= strategy_counts[j];
      }
      for (std::size_t j = 0; j < players; ++j) scratch[j] = points[j][ranks[j]];
      double worst = 0.0;
      for (std::size_t i = 0; i < players; ++i) {
        const double actual = g.utilities[i](scratch);
        const double reply = reply_cache[i][opponent_index_of(i, ranks)];
        worst = std::max(worst, regret_value(reply, actual));
      }
      if (epsilon + worst < threshold) {
        bound.accept(idx);
        break;
      }
    }
  });

  if (!bound.found()) return NoExactEquilibrium{k, total_profiles};

  const std::uint64_t winner = bound.load();
  std::vector<std::uint64_t> ranks(players);
  std::uint64_t rest = winner;
  for (std::size_t j = players; j-- > 0;) {
    ranks[j] = rest % strategy_counts[j];
    rest /= strategy_counts[j];
  }
  ApproxResult result;
  std::vector<std::vector<double>> scratch(players);
  for (std::size_t j = 0; j < players; ++j) scratch[j] = points[j][ranks[j]];
  result.regrets.resize(players);
  double worst = 0.0;
  for (std::size_t i = 0; i < players; ++i) {
    const double actual = g.utilities[i](scratch);
    const double reply = reply_cache[i][opponent_index_of(i, ranks)];
    result.regrets[i] = regret_value(reply, actual);
    worst = std::max(worst, result.regrets[i]);
  }
  result.guarantee = epsilon + worst;
  for (std::size_t j = 0; j < players; ++j) {
    CompositionCursor cursor(g.spaces[j].vertex_count(), k, ranks[j]);
    result.profile.push_back(cursor.count_vector().to_strategy());
  }
  result.method = "lipschitz-search k=" + std::to_string(k) + " l=" + std::to_string(l);
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace apxeq
