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

#include "core/utility.hpp"

#include <algorithm>
#include <cmath>

namespace apxeq {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double penalty_value(std::span<const double> x, std::span<const double> base,
                     NormKind norm) {
  if (norm == NormKind::Inner) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
  }
  if (x.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "penalty_value: dimension mismatch");
  double acc = 0.0;
  switch (norm) {
    case NormKind::L1:
      for (std::size_t i = 0; i < x.size(); ++i) acc += std::abs(x[i] - base[i]);
      return acc;
    case NormKind::L2Sq:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - base[i];
        acc += d * d;
      }
      return acc;
    case NormKind::LInf:
      for (std::size_t i = 0; i < x.size(); ++i)
        acc = std::max(acc, std::abs(x[i] - base[i]));
      return acc;
    case NormKind::Inner:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "penalty_value: unknown norm");
}

double penalty_value(const MixedStrategy& x, const MixedStrategy& base, NormKind norm) {
  return penalty_value(x.span(), base.span(), norm);
}

double utility_biased(const DistanceBiasedGame& g, const MixedStrategy& x,
                      const MixedStrategy& y, Player player) {
  if (x.size() != g.size() || y.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "utility_biased: dimension mismatch");
  if (player == Player::Row) {
    const double payoff = dot(x.span(), g.game.row_payoff.row_payoffs(y));
    return payoff - g.d_row * penalty_value(x, g.base_row, g.norm_row);
  }
  const double payoff = dot(y.span(), g.game.col_payoff.col_payoffs(x));
  return payoff - g.d_col * penalty_value(y, g.base_col, g.norm_col);
}

double utility_penalty(const PenaltyGame& g, const MixedStrategy& x,
                       const MixedStrategy& y, Player player) {
  if (x.size() != g.size() || y.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "utility_penalty: dimension mismatch");
  if (player == Player::Row) {
    const double payoff = dot(x.span(), g.game.row_payoff.row_payoffs(y));
    return payoff - g.penalty_row.evaluator(x);
  }
  const double payoff = dot(y.span(), g.game.col_payoff.col_payoffs(x));
  return payoff - g.penalty_col.evaluator(y);
}

double regret_value(double best_response_value, double actual_utility) {
  return std::max(0.0, best_response_value - actual_utility);
}

}  // namespace apxeq
