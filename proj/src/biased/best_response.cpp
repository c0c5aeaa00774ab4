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

#include "biased/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/utility.hpp"

namespace apxeq {

namespace {

constexpr double kFeasTol = 1e-12;

void check_payoffs(std::span<const double> payoffs) {
  if (payoffs.empty())
    throw Error(ErrorCode::InvalidArgument, "payoff vector must not be empty");
  for (double v : payoffs)
    if (!std::isfinite(v))
      throw Error(ErrorCode::OutOfRange, "payoffs must be finite");
}

std::size_t lowest_index_argmax(std::span<const double> payoffs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < payoffs.size(); ++i)
    if (payoffs[i] > payoffs[best]) best = i;
  return best;
}

/// Indices sorted by key descending, ties by lower index.
std::vector<std::size_t> sorted_desc(std::span<const double> key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  return order;
}

double penalized_utility(std::span<const double> x, std::span<const double> payoffs,
                         std::span<const double> base, double d) {
  double u = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dev = x[i] - base[i];
    u += x[i] * payoffs[i] - d * dev * dev;
  }
  return u;
}

}  // namespace

MixedStrategy pure_best_response(std::span<const double> payoffs) {
  check_payoffs(payoffs);
  return MixedStrategy::pure(payoffs.size(), lowest_index_argmax(payoffs));
}

MixedStrategy best_response_l1(std::span<const double> payoffs, const MixedStrategy& base,
                               double d) {
  check_payoffs(payoffs);
  if (payoffs.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (d < 0.0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative");

  const std::size_t n = payoffs.size();
  const std::size_t b = lowest_index_argmax(payoffs);
  std::vector<double> x(n, 0.0);
  double retained = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == b) continue;
    // Shifting base probability from i to b gains payoffs[b]-payoffs[i] per
    // unit and costs 2d of L1 penalty; keep the base mass when not strictly
    // profitable.
    if (payoffs[b] - payoffs[i] - 2.0 * d <= 0.0) {
      x[i] = base[i];
      retained += base[i];
    }
  }
  // retained <= 1 - base[b]; the clamp only absorbs summation rounding.
  x[b] = std::max(1.0 - retained, 0.0);
  return MixedStrategy(std::move(x));
}

std::vector<KktSolution> quadratic_prefix_candidates(std::span<const double> payoffs,
                                                     std::span<const double> base,
                                                     double d) {
  check_payoffs(payoffs);
  if (payoffs.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (!(d > 0.0))
    throw Error(ErrorCode::InvalidArgument,
                "quadratic closed form needs d > 0; use the pure best response at d = 0");

  const std::size_t n = payoffs.size();
  std::vector<ScoredStrategy> scored(n);
  for (std::size_t i = 0; i < n; ++i)
    scored[i] = ScoredStrategy{i, payoffs[i] + 2.0 * d * base[i]};
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredStrategy& a, const ScoredStrategy& b) {
                     return a.alpha > b.alpha;
                   });

  std::vector<KktSolution> feasible;
  double prefix_sum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix_sum += scored[k - 1].alpha;
    const double lambda = (prefix_sum - 2.0 * d) / static_cast<double>(k);
    // alpha is sorted descending over the prefix, so the last member has the
    // smallest probability; it alone decides feasibility.
    const double smallest = (scored[k - 1].alpha - lambda) / (2.0 * d);
    if (smallest < -kFeasTol) continue;
    std::vector<double> x(n, 0.0);
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double v = std::max((scored[j].alpha - lambda) / (2.0 * d), 0.0);
      x[scored[j].index] = v;
      sum += v;
    }
    for (double& v : x) v /= sum;
    const double utility = penalized_utility(x, payoffs, base, d);
    feasible.push_back(KktSolution{k, lambda, MixedStrategy(std::move(x)), utility});
  }
  return feasible;
}

MixedStrategy best_response_quadratic(std::span<const double> payoffs,
                                      std::span<const double> base, double d) {
  const std::vector<KktSolution> candidates = quadratic_prefix_candidates(payoffs, base, d);
  // The singleton prefix is always feasible, so candidates is never empty.
  const KktSolution* best = &candidates.front();
  for (const KktSolution& c : candidates)
    if (c.utility > best->utility + kFeasTol) best = &c;
  return best->strategy;
}

LinfPartition linf_partition(std::span<const double> payoffs, const MixedStrategy& base,
                             double d) {
  check_payoffs(payoffs);
  if (payoffs.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (d < 0.0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative");

  LinfPartition part;
  const std::vector<std::size_t> order = sorted_desc(payoffs);
  const double top = payoffs[order[0]];
  for (std::size_t idx : order) {
    if (payoffs[idx] == top) {
      part.high.push_back(idx);
    } else if (top - payoffs[idx] - d > 0.0) {
      part.low.push_back(idx);
      part.p_max = std::max(part.p_max, base[idx]);
      part.total_low += base[idx];
    } else {
      part.mid.push_back(idx);
    }
  }
  return part;
}

namespace {

/// Highest linear payoff subject to |x_i - base_i| <= t on the simplex:
/// every coordinate starts at its lower box bound and the slack is poured
/// into the highest payoffs first. Returns the strategy, or empty when the
/// box is infeasible for this t.
std::vector<double> linf_waterfill(std::span<const double> payoffs,
                                   std::span<const double> base, double t,
                                   std::span<const std::size_t> order) {
  const std::size_t n = payoffs.size();
  std::vector<double> x(n);
  double slack = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::max(base[i] - t, 0.0);
    slack -= x[i];
  }
  if (slack < 0.0) return {};
  for (std::size_t idx : order) {
    const double cap = std::min(base[idx] + t, 1.0) - x[idx];
    const double add = std::min(slack, cap);
    x[idx] += add;
    slack -= add;
    if (slack <= 0.0) break;
  }
  if (slack > 1e-9) return {};
  return x;
}

}  // namespace

MixedStrategy best_response_linf(std::span<const double> payoffs,
                                 const MixedStrategy& base, double d) {
  check_payoffs(payoffs);
  if (payoffs.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "payoffs/base size mismatch");
  if (d < 0.0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative");

  // The best response solves max over deviation budgets t of
  // (best linear value within the box |x_i - base_i| <= t) - d*t. Both terms
  // are piecewise linear in t, so scanning the breakpoints is exact. The
  // single-pair shift rule misses solutions that move several coordinates
  // under one shared deviation budget, so the full sweep is required.
  const std::size_t n = payoffs.size();
  const std::vector<std::size_t> order = sorted_desc(payoffs);

  std::vector<double> breakpoints{0.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    if (base[i] > 0.0 && base[i] < 1.0) breakpoints.push_back(base[i]);
    const double cap_hit = 1.0 - base[i];
    if (cap_hit > 0.0 && cap_hit < 1.0) breakpoints.push_back(cap_hit);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  // Between consecutive kink values the box bounds are linear in t, so the
  // greedy boundary moves where the capacity of a payoff prefix meets the
  // remaining slack; those crossings are linear-equation roots.
  std::vector<double> candidates = breakpoints;
  auto prefix_gap = [&](double t, std::size_t k) {
    double slack = 1.0;
    for (std::size_t i = 0; i < n; ++i) slack -= std::max(base[i] - t, 0.0);
    double capacity = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t idx = order[j];
      capacity += std::min(base[idx] + t, 1.0) - std::max(base[idx] - t, 0.0);
    }
    return capacity - slack;
  };
  for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    const double a = breakpoints[s];
    const double b = breakpoints[s + 1];
    for (std::size_t k = 1; k <= n; ++k) {
      const double fa = prefix_gap(a, k);
      const double fb = prefix_gap(b, k);
      if (fa == fb) continue;
      const double root = a + (b - a) * (-fa) / (fb - fa);
      if (root > a && root < b) candidates.push_back(root);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<double> best_x(base.probs());
  double best_value = dot(base.span(), payoffs);
  for (const double t : candidates) {
    std::vector<double> x = linf_waterfill(payoffs, base.span(), t, order);
    if (x.empty()) continue;
    const double value =
        dot(x, payoffs) - d * penalty_value(x, base.span(), NormKind::LInf);
    if (value > best_value + kFeasTol) {
      best_value = value;
      best_x = std::move(x);
    }
  }
  return MixedStrategy::normalized(std::move(best_x));
}

bool is_base_dominant(NormKind norm, double d) noexcept {
  switch (norm) {
    case NormKind::L1: return d >= 0.5;
    case NormKind::LInf: return d >= 1.0;
    case NormKind::L2Sq:
    case NormKind::Inner: return false;
  }
  return false;
}

double wsne_quality(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.size() != g.size() || y.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "wsne_quality: dimension mismatch");
  const std::vector<double> row = g.row_payoff.row_payoffs(y);
  const std::vector<double> col = g.col_payoff.col_payoffs(x);
  const double row_best = *std::max_element(row.begin(), row.end());
  const double col_best = *std::max_element(col.begin(), col.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x[i] > kFeasTol) worst = std::max(worst, row_best - row[i]);
    if (y[i] > kFeasTol) worst = std::max(worst, col_best - col[i]);
  }
  return worst;
}

MixedStrategy best_response_for_norm(NormKind norm, std::span<const double> payoffs,
                                     const MixedStrategy& base, double d) {
  if (d == 0.0) return pure_best_response(payoffs);
  switch (norm) {
    case NormKind::L1:
      return best_response_l1(payoffs, base, d);
    case NormKind::LInf:
      return best_response_linf(payoffs, base, d);
    case NormKind::L2Sq:
      return best_response_quadratic(payoffs, base.span(), d);
    case NormKind::Inner: {
      const std::vector<double> zeros(payoffs.size(), 0.0);
      return best_response_quadratic(payoffs, zeros, d);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown norm");
}

MixedStrategy best_response(const DistanceBiasedGame& g, Player player,
                            const MixedStrategy& opponent) {
  if (player == Player::Row) {
    const std::vector<double> payoffs = g.game.row_payoff.row_payoffs(opponent);
    return best_response_for_norm(g.norm_row, payoffs, g.base_row, g.d_row);
  }
  const std::vector<double> payoffs = g.game.col_payoff.col_payoffs(opponent);
  return best_response_for_norm(g.norm_col, payoffs, g.base_col, g.d_col);
}

}  // namespace apxeq
