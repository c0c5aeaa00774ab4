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

#ifndef APXEQ_CORE_UTILITY_HPP
#define APXEQ_CORE_UTILITY_HPP

#include <span>

#include "core/types.hpp"

namespace apxeq {

double dot(std::span<const double> a, std::span<const double> b);

/// Distance penalty of x from the base strategy under the given norm:
/// L1 -> sum |x_i - p_i|, L2Sq -> sum (x_i - p_i)^2, LInf -> max |x_i - p_i|,
/// Inner -> x^T x (base ignored).
double penalty_value(const MixedStrategy& x, const MixedStrategy& base, NormKind norm);
double penalty_value(std::span<const double> x, std::span<const double> base,
                     NormKind norm);

/// Penalized utility of one player: payoff minus weighted distance penalty.
double utility_biased(const DistanceBiasedGame& g, const MixedStrategy& x,
                      const MixedStrategy& y, Player player);

/// Penalized utility with a black-box penalty evaluator.
double utility_penalty(const PenaltyGame& g, const MixedStrategy& x,
                       const MixedStrategy& y, Player player);

/// Regret clamped at zero; a negative raw gap signals the supplied
/// best-response value was approximate.
double regret_value(double best_response_value, double actual_utility);

}  // namespace apxeq

#endif  // APXEQ_CORE_UTILITY_HPP
