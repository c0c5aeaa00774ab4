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
// Strongly polynomial best responses against a fixed opponent strategy.
// `payoffs` is always the vector of pure-strategy payoffs against that
// opponent (R*y for the row player, C^T*x for the column player), and all
// ties are broken toward lower original indices so outputs are
// deterministic.

#ifndef APXEQ_BIASED_BEST_RESPONSE_HPP
#define APXEQ_BIASED_BEST_RESPONSE_HPP

#include <span>
#include <vector>

#include "core/types.hpp"

namespace apxeq {

/// Pure strategy index and its score alpha_i (payoffs_i + 2d*base_i for the
/// quadratic case, the raw payoff for L1/LInf).
struct ScoredStrategy {
  std::size_t index = 0;
  double alpha = 0.0;
};

/// One stationarity solution of the quadratic program restricted to a
/// prefix support: x_i = (alpha_i - multiplier) / (2d) on the support.
struct KktSolution {
  std::size_t support_size = 0;
  double multiplier = 0.0;
  MixedStrategy strategy;
  double utility = 0.0;
};

/// High/mid/low payoff partition for the LInf best response. Indices inside
/// each set are ordered by payoff descending (ties by lower index). Indices
/// whose payoff gap to the top equals d exactly fall into mid, keeping the
/// three sets a partition of [n].
struct LinfPartition {
  std::vector<std::size_t> high;
  std::vector<std::size_t> mid;
  std::vector<std::size_t> low;
  double p_max = 0.0;     // max base probability over low
  double total_low = 0.0; // sum of base probabilities over low
};

/// Lowest-index maximizer of payoffs as a pure strategy.
MixedStrategy pure_best_response(std::span<const double> payoffs);

/// Shift-rule best response for the L1 penalty: keep base probability on
/// every strategy whose payoff gap to the best pure strategy is at most 2d,
/// move everything else onto the best pure strategy.
MixedStrategy best_response_l1(std::span<const double> payoffs, const MixedStrategy& base,
                               double d);

/// All feasible prefix-support stationarity solutions, in increasing
/// support size. Exposed for the structural property checks.
std::vector<KktSolution> quadratic_prefix_candidates(std::span<const double> payoffs,
                                                     std::span<const double> base,
                                                     double d);

/// Closed-form best response for the L2^2 penalty (base = zero vector gives
/// the inner-product penalty). Requires d > 0; use pure_best_response for
/// d = 0.
MixedStrategy best_response_quadratic(std::span<const double> payoffs,
                                      std::span<const double> base, double d);

LinfPartition linf_partition(std::span<const double> payoffs, const MixedStrategy& base,
                             double d);

/// Exact best response for the LInf penalty: sweeps all candidate deviation
/// budgets t and waterfills the box |x_i - base_i| <= t by payoff order.
/// Single-pair shift rules are not sufficient here, because one budget t
/// pays for moving many coordinates at once; the sweep accounts for that.
/// Ties resolve to the smallest budget, so an unchanged base wins when
/// nothing strictly beats it.
MixedStrategy best_response_linf(std::span<const double> payoffs,
                                 const MixedStrategy& base, double d);

/// Single-shift dominance conditions: L1 with d >= 1/2 (a genuine dominance
/// guarantee) and LInf with d >= 1 (rules out pairwise shifts only - moving
/// several coordinates under the shared LInf budget can still profit, so
/// the dominance shortcut verifies its zero-regret certificate before
/// trusting this signal). Always false for the quadratic penalties.
bool is_base_dominant(NormKind norm, double d) noexcept;

/// Largest payoff shortfall of any supported pure strategy against the best
/// pure payoff, over both players of the unbiased bimatrix game. Zero at a
/// pure Nash profile; a profile is an eps-WSNE iff this value is <= eps.
double wsne_quality(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y);

/// Norm dispatcher used by the base algorithm and regret measurement.
/// d = 0 degenerates every norm to the pure best response.
MixedStrategy best_response_for_norm(NormKind norm, std::span<const double> payoffs,
                                     const MixedStrategy& base, double d);

/// Best response of one player of a biased game against a fixed opponent.
MixedStrategy best_response(const DistanceBiasedGame& g, Player player,
                            const MixedStrategy& opponent);

}  // namespace apxeq

#endif  // APXEQ_BIASED_BEST_RESPONSE_HPP
