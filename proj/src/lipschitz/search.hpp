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
// Guarantee evaluation and k-uniform profile search for Lipschitz games.
// The guarantee of a profile is approximated by scanning each player's
// l-uniform grid for an approximate best response; the search scans all
// k-uniform profiles in global enumeration order and accepts the first one
// whose evaluated guarantee is strictly below 2*epsilon, which certifies a
// 3*epsilon-equilibrium.

#ifndef APXEQ_LIPSCHITZ_SEARCH_HPP
#define APXEQ_LIPSCHITZ_SEARCH_HPP

#include <optional>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace apxeq {

struct GuaranteeDetail {
  double alpha = 0.0;            // delta + max clamped regret
  std::vector<double> regrets;   // per player, clamped at 0
};

struct SearchOptions {
  std::optional<std::int64_t> k_override;
  int workers = 1;
  /// Projected utility evaluations, (profiles) * (largest per-player scan);
  /// exceeding it raises BudgetExceeded before any work starts.
  double budget = 5e7;
  /// When false, workers may return any accepting profile instead of the
  /// lexicographically first one.
  bool lexicographic_first = true;
};

/// Approximates the guarantee of a profile within an additive delta: for
/// each player the best l-uniform reply is found by exhaustive scan with
/// l = l_for_regret(lambda, p, gamma, delta), regrets are clamped at zero,
/// and delta is added on top. The result lies in
/// [true guarantee, true guarantee + delta].
GuaranteeDetail evaluate_guarantee_detail(const LipschitzGame& g,
                                          std::span<const std::vector<double>> profile,
                                          double delta, int workers = 1);
double evaluate_guarantee(const LipschitzGame& g,
                          std::span<const std::vector<double>> profile, double delta,
                          int workers = 1);

/// Scans all k-uniform profiles (k from k_for_lipschitz unless overridden)
/// and returns the first one in global enumeration order whose evaluated
/// guarantee is < 2*epsilon; the returned guarantee value upper-bounds the
/// profile's true guarantee. Returns NoExactEquilibrium only after
/// exhausting every profile.
LipschitzVerdict find_equilibrium(const LipschitzGame& g, double epsilon,
                                  const SearchOptions& options = {});

}  // namespace apxeq

#endif  // APXEQ_LIPSCHITZ_SEARCH_HPP
