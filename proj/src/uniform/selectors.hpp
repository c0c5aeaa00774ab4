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
// Grid-size selectors. Each returns the smallest integer satisfying the
// corresponding sampling bound; taking the ceiling of a real-valued bound
// preserves every guarantee.

#ifndef APXEQ_UNIFORM_SELECTORS_HPP
#define APXEQ_UNIFORM_SELECTORS_HPP

#include <cstdint>

namespace apxeq {

/// ceil(16 * M^2 * lambda^2 * p * gamma^2 / eps^2).
/// Uses the M^2 exponent; callers that prefer the weaker single-M variant
/// pass an explicit k override to the search instead.
std::int64_t k_for_lipschitz(double players, double lambda, double p, double gamma,
                             double epsilon);

/// ceil(4 * lambda^2 * p * gamma^2 / delta^2): grid size for a
/// delta-accurate best-response scan.
std::int64_t l_for_regret(double lambda, double p, double gamma, double delta);

/// Smallest k >= 1 with
///   B(k) = 2*(4*e^{-k eps^2/8} + 8 lambda sqrt(p)/(eps sqrt(k)) + n*e^{-k eps^2/2}) < 1.
/// B is monotone decreasing in k, so the minimum is found by doubling and
/// then binary search. Errors with CapExceeded when the result would pass
/// the cap (epsilon infeasibly small for this game size).
std::int64_t k_for_penalty(std::size_t n, double lambda, double p, double epsilon,
                           std::int64_t cap = 1000000000);

/// ceil(17 * lambda^2 * sqrt(p) / eps^2): grid size for an eps-accurate
/// penalty-game best response.
std::int64_t l_for_penalty_br(double lambda, double p, double epsilon);

/// The bound B(k) above, exposed for tests.
double penalty_failure_bound(std::int64_t k, std::size_t n, double lambda, double p,
                             double epsilon);

}  // namespace apxeq

#endif  // APXEQ_UNIFORM_SELECTORS_HPP
