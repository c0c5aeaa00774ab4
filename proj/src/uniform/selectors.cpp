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

#include "uniform/selectors.hpp"

#include <algorithm>
#include <cmath>

#include "core/types.hpp"

namespace {

constexpr std::int64_t kSelectorCap = std::int64_t{1} << 62;

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0)
    throw apxeq::Error(apxeq::ErrorCode::InvalidArgument,
                       std::string(name) + " must be positive and finite");
}

std::int64_t ceil_to_int(double value, const char* what) {
  if (!std::isfinite(value) || value >= static_cast<double>(kSelectorCap))
    throw apxeq::Error(apxeq::ErrorCode::CapExceeded,
                       std::string(what) + " overflows the selector range");
  return static_cast<std::int64_t>(std::ceil(value));
}

}  // namespace

namespace apxeq {

std::int64_t k_for_lipschitz(double players, double lambda, double p, double gamma,
                             double epsilon) {
  require_positive(players, "players");
  require_positive(lambda, "lambda");
  require_positive(p, "p");
  require_positive(gamma, "gamma");
  require_positive(epsilon, "epsilon");
  const double value =
      16.0 * players * players * lambda * lambda * p * gamma * gamma / (epsilon * epsilon);
  return ceil_to_int(value, "k_for_lipschitz");
}

std::int64_t l_for_regret(double lambda, double p, double gamma, double delta) {
  require_positive(lambda, "lambda");
  require_positive(p, "p");
  require_positive(gamma, "gamma");
  require_positive(delta, "delta");
  const double value = 4.0 * lambda * lambda * p * gamma * gamma / (delta * delta);
  return ceil_to_int(value, "l_for_regret");
}

double penalty_failure_bound(std::int64_t k, std::size_t n, double lambda, double p,
                             double epsilon) {
  const double kd = static_cast<double>(k);
  const double e2 = epsilon * epsilon;
  return 2.0 * (4.0 * std::exp(-kd * e2 / 8.0) +
                8.0 * lambda * std::sqrt(p) / (epsilon * std::sqrt(kd)) +
                static_cast<double>(n) * std::exp(-kd * e2 / 2.0));
}

std::int64_t k_for_penalty(std::size_t n, double lambda, double p, double epsilon,
                           std::int64_t cap) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  require_positive(lambda, "lambda");
  if (!std::isfinite(p) || p < 2.0)
    throw Error(ErrorCode::InvalidArgument, "p must be >= 2");
  require_positive(epsilon, "epsilon");
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
  cap = std::min(cap, std::int64_t{1} << 60);

  auto ok = [&](std::int64_t k) { return penalty_failure_bound(k, n, lambda, p, epsilon) < 1.0; };
  if (ok(1)) return 1;
  // Double until the bound dips below 1, then bisect for the first such k.
  std::int64_t lo = 1;  // ok(lo) is false throughout
  std::int64_t hi = 2;
  while (!ok(hi)) {
    lo = hi;
    if (hi > cap)
      throw Error(ErrorCode::CapExceeded,
                  "k_for_penalty exceeds the cap; epsilon is infeasibly small");
    hi *= 2;
  }
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid;
  }
  if (hi > cap)
    throw Error(ErrorCode::CapExceeded,
                "k_for_penalty exceeds the cap; epsilon is infeasibly small");
  return hi;
}

std::int64_t l_for_penalty_br(double lambda, double p, double epsilon) {
  require_positive(lambda, "lambda");
  if (!std::isfinite(p) || p < 2.0)
    throw Error(ErrorCode::InvalidArgument, "p must be >= 2");
  require_positive(epsilon, "epsilon");
  const double value = 17.0 * lambda * lambda * std::sqrt(p) / (epsilon * epsilon);
  return ceil_to_int(value, "l_for_penalty_br");
}

}  // namespace apxeq
