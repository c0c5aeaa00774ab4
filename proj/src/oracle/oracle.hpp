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
// Brute-force reference routines: exhaustive l-uniform grid search for
// approximate best responses, full 2^n support enumeration for quadratic
// best responses, and the regret-based equilibrium verifier.

#ifndef APXEQ_ORACLE_ORACLE_HPP
#define APXEQ_ORACLE_ORACLE_HPP

#include <functional>
#include <span>

#include "core/types.hpp"
#include "uniform/composition.hpp"

namespace apxeq {

struct GridBest {
  CountVector argmax;
  double value = 0.0;
};

/// Exhaustively evaluates value_fn at every l-uniform point of the space
/// and returns the maximizer; ties go to the earliest point in enumeration
/// order regardless of worker count. value_fn receives hull points and must
/// be safe for concurrent calls.
GridBest grid_best_response(const std::function<double(std::span<const double>)>& value_fn,
                            const ConvexStrategySpace& space, std::int64_t l,
                            int workers = 1);

/// Convenience overload over the standard simplex.
GridBest grid_best_response(const std::function<double(const MixedStrategy&)>& value_fn,
                            std::size_t n, std::int64_t l, int workers = 1);

/// Maximizes sum_i x_i*payoffs_i - d*||x - base||_2^2 over the simplex by
/// checking the stationarity closed form on all 2^n supports, keeping those
/// whose in-support probabilities are nonnegative (within 1e-12, clamped),
/// and returning the feasible solution with the highest utility. Guarded to
/// n <= 20; this routine exists for tests.
MixedStrategy exhaustive_quadratic_br(std::span<const double> payoffs,
                                      std::span<const double> base, double d);

struct VerifyOutcome {
  bool holds = false;
  std::size_t player = 0;  // largest-gap violator when holds is false
  double gap = 0.0;
};

/// Checks regret(br_values[i], utilities[i]) <= epsilon + 1e-9 per player.
VerifyOutcome verify_epsilon_equilibrium(std::span<const double> utilities,
                                         std::span<const double> br_values,
                                         double epsilon);

/// Biased-game convenience: utilities at (x, y) are computed internally;
/// br_values must come from an exact or oracle-certified best response.
VerifyOutcome verify_epsilon_equilibrium(const DistanceBiasedGame& g,
                                         const MixedStrategy& x, const MixedStrategy& y,
                                         double epsilon, std::span<const double> br_values);

}  // namespace apxeq

#endif  // APXEQ_ORACLE_ORACLE_HPP
