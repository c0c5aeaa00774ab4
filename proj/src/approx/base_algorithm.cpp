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

#include "approx/base_algorithm.hpp"

#include <chrono>
#include <string>

#include "biased/best_response.hpp"
#include "core/utility.hpp"

namespace apxeq {

namespace {

/// Starting strategy for the row player's side of the mix. The inner
/// product penalty has the zero vector as its implicit base, which is not a
/// simplex point, so the fully mixed strategy stands in for it.
MixedStrategy row_start(const DistanceBiasedGame& g) {
  if (g.norm_row == NormKind::Inner) return MixedStrategy::uniform(g.size());
  return g.base_row;
}

MixedStrategy mix(double delta, const MixedStrategy& a, const MixedStrategy& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = delta * a[i] + (1.0 - delta) * b[i];
  return MixedStrategy::normalized(std::move(out));
}

}  // namespace

double choose_delta(const DistanceBiasedGame& g) {
  switch (g.norm_col) {
    case NormKind::L1:
    case NormKind::LInf:
      return 2.0 / 3.0;
    case NormKind::L2Sq:
      return g.base_col.max_prob() <= 0.5 ? 5.0 / 7.0 : 2.0 / 3.0;
    case NormKind::Inner:
      return g.d_col > 0.5 ? 13.0 / 21.0 : 3.0 / 5.0;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown norm");
}

double analytic_bound(const DistanceBiasedGame& g) { return choose_delta(g); }

std::pair<double, double> measure_regrets(const DistanceBiasedGame& g,
                                          const MixedStrategy& x, const MixedStrategy& y) {
  const MixedStrategy row_br = best_response(g, Player::Row, y);
  const MixedStrategy col_br = best_response(g, Player::Col, x);
  const double row_regret = regret_value(utility_biased(g, row_br, y, Player::Row),
                                         utility_biased(g, x, y, Player::Row));
  const double col_regret = regret_value(utility_biased(g, x, col_br, Player::Col),
                                         utility_biased(g, x, y, Player::Col));
  return {row_regret, col_regret};
}

std::optional<ApproxResult> exact_equilibrium_if_dominant(const DistanceBiasedGame& g) {
  const bool row_dom = is_base_dominant(g.norm_row, g.d_row);
  const bool col_dom = is_base_dominant(g.norm_col, g.d_col);
  if (!row_dom && !col_dom) return std::nullopt;

  MixedStrategy x = row_dom ? g.base_row : best_response(g, Player::Row, g.base_col);
  MixedStrategy y = col_dom ? g.base_col : best_response(g, Player::Col, g.base_row);
  const auto [row_regret, col_regret] = measure_regrets(g, x, y);
  // The certificate must be exact. The L1 condition always passes; the LInf
  // single-shift condition can fail against coordinated deviations, in
  // which case the caller falls back to the mixing algorithm.
  if (row_regret > 1e-9 || col_regret > 1e-9) return std::nullopt;

  ApproxResult result;
  result.profile = {std::move(x), std::move(y)};
  result.regrets = {row_regret, col_regret};
  result.guarantee = std::max(row_regret, col_regret);
  result.method = "dominance";
  return result;
}

ApproxResult base_algorithm(const DistanceBiasedGame& g) {
  const auto started = std::chrono::steady_clock::now();
  if (auto shortcut = exact_equilibrium_if_dominant(g)) {
    shortcut->runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return *shortcut;
  }

  const MixedStrategy start = row_start(g);
  const MixedStrategy col_response = best_response(g, Player::Col, start);
  const MixedStrategy row_response = best_response(g, Player::Row, col_response);
  const double delta = choose_delta(g);
  const MixedStrategy mixed_row = mix(delta, start, row_response);

  const auto [row_regret, col_regret] = measure_regrets(g, mixed_row, col_response);

  ApproxResult result;
  result.profile = {mixed_row, col_response};
  result.regrets = {row_regret, col_regret};
  result.guarantee = std::max(row_regret, col_regret);
  result.method = std::string("base/") + norm_name(g.norm_row) + "-" + norm_name(g.norm_col);
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace apxeq
