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

#include "penalty/qptas.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "core/parallel.hpp"
#include "core/utility.hpp"
#include "oracle/oracle.hpp"
#include "uniform/composition.hpp"
#include "uniform/selectors.hpp"

namespace apxeq {

namespace {

constexpr std::uint64_t kCacheEntryCap = 8u << 20;

const PenaltySpec& spec_of(const PenaltyGame& g, Player player) {
  return player == Player::Row ? g.penalty_row : g.penalty_col;
}

/// Pure payoffs of `player` against the opponent strategy.
std::vector<double> payoffs_against(const PenaltyGame& g, Player player,
                                    const MixedStrategy& opponent) {
  return player == Player::Row ? g.game.row_payoff.row_payoffs(opponent)
                               : g.game.col_payoff.col_payoffs(opponent);
}

}  // namespace

std::pair<MixedStrategy, double> approx_best_response_penalty(const PenaltyGame& g,
                                                              Player player,
                                                              const MixedStrategy& opponent,
                                                              double epsilon, int workers) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (opponent.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "opponent strategy size mismatch");
  const PenaltySpec& spec = spec_of(g, player);
  const std::int64_t l =
      l_for_penalty_br(spec.lipschitz_lambda, spec.norm_exponent, epsilon);
  const std::vector<double> payoffs = payoffs_against(g, player, opponent);
  const GridBest best = grid_best_response(
      [&](const MixedStrategy& candidate) {
        return dot(candidate.span(), payoffs) - spec.evaluator(candidate);
      },
      g.size(), l, workers);
  return {best.argmax.to_strategy(), best.value};
}

LipschitzVerdict qptas(const PenaltyGame& g, double epsilon, const SearchOptions& options) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = g.size();
  const double lambda_max =
      std::max(g.penalty_row.lipschitz_lambda, g.penalty_col.lipschitz_lambda);
  const double p_max = std::max(g.penalty_row.norm_exponent, g.penalty_col.norm_exponent);
  const std::int64_t k =
      options.k_override.value_or(k_for_penalty(n, lambda_max, p_max, epsilon));
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");

  const std::int64_t l_row =
      l_for_penalty_br(g.penalty_row.lipschitz_lambda, g.penalty_row.norm_exponent, epsilon);
  const std::int64_t l_col =
      l_for_penalty_br(g.penalty_col.lipschitz_lambda, g.penalty_col.norm_exponent, epsilon);

  const std::uint64_t strategies = composition_count(n, k);
  const double strategies_d = static_cast<double>(strategies);
  const double scan_max = std::max(static_cast<double>(composition_count(n, l_row)),
                                   static_cast<double>(composition_count(n, l_col)));
  const double projected = strategies_d * strategies_d * scan_max;
  if (!(projected <= options.budget))
    throw Error(ErrorCode::BudgetExceeded,
                "projected work " + std::to_string(projected) +
                    " utility evaluations exceeds budget " + std::to_string(options.budget) +
                    "; shrink the game, raise epsilon, or override k");
  if (strategies > kCacheEntryCap || strategies_d * strategies_d >= 9e18)
    throw Error(ErrorCode::BudgetExceeded, "profile count exceeds the enumerable range");

  // Everything the pair scan needs is a function of one side only; compute
  // it once per k-uniform strategy. reply[.] holds the approximate
  // best-response value of the *other* player against that strategy.
  std::vector<MixedStrategy> strategy(strategies, MixedStrategy::uniform(1));
  {
    CompositionCursor cursor(n, k, 0);
    while (!cursor.done()) {
      strategy[cursor.rank()] = cursor.count_vector().to_strategy();
      cursor.advance();
    }
  }
  std::vector<double> row_penalty(strategies), col_penalty(strategies);
  std::vector<std::vector<double>> row_payoffs(strategies), col_payoffs(strategies);
  std::vector<double> reply_vs_col(strategies), reply_vs_row(strategies);
  parallel_for_index(strategies, options.workers, [&](std::uint64_t r) {
    const MixedStrategy& s = strategy[r];
    row_penalty[r] = g.penalty_row.evaluator(s);
    col_penalty[r] = g.penalty_col.evaluator(s);
    row_payoffs[r] = g.game.row_payoff.row_payoffs(s);  // R*s, for s a column strategy
    col_payoffs[r] = g.game.col_payoff.col_payoffs(s);  // C^T*s, for s a row strategy
    reply_vs_col[r] = approx_best_response_penalty(g, Player::Row, s, epsilon, 1).second;
    reply_vs_row[r] = approx_best_response_penalty(g, Player::Col, s, epsilon, 1).second;
  });

  const double threshold = 2.0 * epsilon;
  const std::uint64_t total_profiles = strategies * strategies;
  FirstAcceptBound bound;
  run_partitioned(total_profiles, options.workers, [&](int, IndexRange range) {
    for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
      if (options.lexicographic_first) {
        if (idx > bound.load()) break;
      } else if (bound.found()) {
        break;
      }
      const std::uint64_t rx = idx / strategies;
      const std::uint64_t ry = idx % strategies;
      const double t_row = dot(strategy[rx].span(), row_payoffs[ry]) - row_penalty[rx];
      const double t_col = dot(strategy[ry].span(), col_payoffs[rx]) - col_penalty[ry];
      const double worst = std::max(regret_value(reply_vs_col[ry], t_row),
                                    regret_value(reply_vs_row[rx], t_col));
      if (epsilon + worst < threshold) {
        bound.accept(idx);
        break;
      }
    }
  });

  if (!bound.found()) return NoExactEquilibrium{k, total_profiles};

  const std::uint64_t winner = bound.load();
  const std::uint64_t rx = winner / strategies;
  const std::uint64_t ry = winner % strategies;
  const double t_row = dot(strategy[rx].span(), row_payoffs[ry]) - row_penalty[rx];
  const double t_col = dot(strategy[ry].span(), col_payoffs[rx]) - col_penalty[ry];

  ApproxResult result;
  result.profile = {strategy[rx], strategy[ry]};
  result.regrets = {regret_value(reply_vs_col[ry], t_row),
                    regret_value(reply_vs_row[rx], t_col)};
  result.guarantee = epsilon + std::max(result.regrets[0], result.regrets[1]);
  result.method = "qptas k=" + std::to_string(k) + " l=" + std::to_string(l_row) + "/" +
                  std::to_string(l_col);
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace apxeq
