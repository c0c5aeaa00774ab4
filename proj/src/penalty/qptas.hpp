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
// Quasi-polynomial search for two-player penalty games: best responses are
// approximated on an l-uniform grid sized from the player's declared
// Lipschitz data, and all pairs of k-uniform strategies are scanned with
// the same accept rule as the Lipschitz search.

#ifndef APXEQ_PENALTY_QPTAS_HPP
#define APXEQ_PENALTY_QPTAS_HPP

#include <utility>

#include "core/types.hpp"
#include "lipschitz/search.hpp"

namespace apxeq {

/// Best l-uniform reply against the opponent, l = l_for_penalty_br of the
/// player's penalty spec; the value is within epsilon of the exact best
/// response value.
std::pair<MixedStrategy, double> approx_best_response_penalty(const PenaltyGame& g,
                                                              Player player,
                                                              const MixedStrategy& opponent,
                                                              double epsilon,
                                                              int workers = 1);

/// k from k_for_penalty with the worst declared (lambda, p) over both
/// players unless overridden. Accepts the first profile in global order
/// whose evaluated guarantee (epsilon + max approximate regret) is
/// < 2*epsilon; a returned profile is a 3*epsilon-equilibrium.
LipschitzVerdict qptas(const PenaltyGame& g, double epsilon,
                       const SearchOptions& options = {});

}  // namespace apxeq

#endif  // APXEQ_PENALTY_QPTAS_HPP
