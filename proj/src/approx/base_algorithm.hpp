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
// The two-best-response mixing algorithm for distance-biased games: the
// column player best-responds to the row base strategy, the row player
// best-responds to that, and the row player then mixes back toward the base
// with a norm-dependent weight delta that equalizes the two players' regret
// bounds.

#ifndef APXEQ_APPROX_BASE_ALGORITHM_HPP
#define APXEQ_APPROX_BASE_ALGORITHM_HPP

#include <optional>
#include <utility>

#include "core/types.hpp"

namespace apxeq {

/// Mixing weight per column norm: 2/3 for L1 and LInf; for L2^2, 5/7 when
/// max_k q_k <= 1/2 and 2/3 otherwise; for the inner-product penalty, 13/21
/// when d_col > 1/2 and 3/5 otherwise.
double choose_delta(const DistanceBiasedGame& g);

/// The per-instance guarantee the mixing weight was chosen to achieve
/// (equalized, so it coincides with choose_delta).
double analytic_bound(const DistanceBiasedGame& g);

/// Exact per-player regrets at (x, y), measured with the combinatorial best
/// responses and clamped at zero.
std::pair<double, double> measure_regrets(const DistanceBiasedGame& g,
                                          const MixedStrategy& x, const MixedStrategy& y);

/// Dominance shortcut: when a base strategy is dominant (L1 with d >= 1/2,
/// LInf with d >= 1), pairs it with the opponent's exact best response and
/// returns the profile with its zero-regret certificate. Empty otherwise.
std::optional<ApproxResult> exact_equilibrium_if_dominant(const DistanceBiasedGame& g);

/// Full solver: dominance shortcut first, then the mixing algorithm. The
/// reported guarantee is the maximum measured regret.
ApproxResult base_algorithm(const DistanceBiasedGame& g);

}  // namespace apxeq

#endif  // APXEQ_APPROX_BASE_ALGORITHM_HPP
