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

#include "core/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace apxeq {

namespace {

constexpr double kSimplexSumTol = 1e-12;

void check(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

const char* norm_name(NormKind norm) noexcept {
  switch (norm) {
    case NormKind::L1: return "l1";
    case NormKind::L2Sq: return "l2sq";
    case NormKind::LInf: return "linf";
    case NormKind::Inner: return "inner";
  }
  return "?";
}

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
  check(!probs_.empty(), ErrorCode::InvalidArgument, "strategy must not be empty");
  double sum = 0.0;
  for (double v : probs_) {
    check(std::isfinite(v) && v >= 0.0, ErrorCode::OutOfRange,
          "strategy entries must be finite and nonnegative");
    sum += v;
  }
  check(std::abs(sum - 1.0) <= kSimplexSumTol, ErrorCode::OutOfRange,
        "strategy entries must sum to 1 within 1e-12");
}

MixedStrategy MixedStrategy::uniform(std::size_t n) {
  check(n >= 1, ErrorCode::InvalidArgument, "uniform strategy needs n >= 1");
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  return MixedStrategy(std::move(p), Unchecked{});
}

MixedStrategy MixedStrategy::pure(std::size_t n, std::size_t index) {
  check(index < n, ErrorCode::InvalidArgument, "pure strategy index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return MixedStrategy(std::move(p), Unchecked{});
}

MixedStrategy MixedStrategy::normalized(std::vector<double> weights) {
  check(!weights.empty(), ErrorCode::InvalidArgument, "strategy must not be empty");
  double sum = 0.0;
  for (double v : weights) {
    check(std::isfinite(v) && v >= 0.0, ErrorCode::OutOfRange,
          "weights must be finite and nonnegative");
    sum += v;
  }
  check(sum > 0.0, ErrorCode::InvalidArgument, "cannot normalize all-zero weights");
  for (double& v : weights) v /= sum;
  return MixedStrategy(std::move(weights), Unchecked{});
}

std::size_t MixedStrategy::support_size(double tol) const noexcept {
  std::size_t count = 0;
  for (double v : probs_)
    if (v > tol) ++count;
  return count;
}

double MixedStrategy::max_prob() const noexcept {
  return *std::max_element(probs_.begin(), probs_.end());
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check(n >= 1, ErrorCode::InvalidArgument, "matrix must be at least 1x1");
  check(values_.size() == n * n, ErrorCode::DimensionMismatch,
        "matrix needs exactly n*n entries");
  for (double v : values_)
    check(std::isfinite(v) && v >= 0.0 && v <= 1.0, ErrorCode::OutOfRange,
          "payoff entries must lie in [0,1]");
}

SquareMatrix SquareMatrix::zeros(std::size_t n) {
  return SquareMatrix(n, std::vector<double>(n * n, 0.0));
}

std::vector<double> SquareMatrix::row_payoffs(const MixedStrategy& y) const {
  check(y.size() == n_, ErrorCode::DimensionMismatch, "strategy/matrix size mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = values_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * y[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> SquareMatrix::col_payoffs(const MixedStrategy& x) const {
  check(x.size() == n_, ErrorCode::DimensionMismatch, "strategy/matrix size mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const double* row = values_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) out[j] += xi * row[j];
  }
  return out;
}

BimatrixGame::BimatrixGame(SquareMatrix r, SquareMatrix c)
    : row_payoff(std::move(r)), col_payoff(std::move(c)) {
  check(row_payoff.size() == col_payoff.size(), ErrorCode::DimensionMismatch,
        "R and C must have equal dimensions");
}

DistanceBiasedGame::DistanceBiasedGame(BimatrixGame g, MixedStrategy p, MixedStrategy q,
                                       NormKind nr, NormKind nc, double dr, double dc)
    : game(std::move(g)),
      base_row(std::move(p)),
      base_col(std::move(q)),
      norm_row(nr),
      norm_col(nc),
      d_row(dr),
      d_col(dc) {
  check(base_row.size() == game.size() && base_col.size() == game.size(),
        ErrorCode::DimensionMismatch, "base strategies must have dimension n");
  check(std::isfinite(d_row) && d_row >= 0.0 && std::isfinite(d_col) && d_col >= 0.0,
        ErrorCode::OutOfRange, "penalty weights must be nonnegative");
}

void PenaltySpec::validate() const {
  check(static_cast<bool>(evaluator), ErrorCode::InvalidArgument,
        "penalty evaluator must be set");
  check(std::isfinite(lipschitz_lambda) && lipschitz_lambda > 0.0,
        ErrorCode::OutOfRange, "penalty lambda must be positive and finite");
  check(std::isfinite(norm_exponent) && norm_exponent >= 2.0, ErrorCode::OutOfRange,
        "penalty norm exponent must be >= 2");
}

PenaltySpec PenaltySpec::zero() {
  PenaltySpec spec;
  spec.evaluator = [](const MixedStrategy&) { return 0.0; };
  // Any positive constant is a valid Lipschitz bound for the zero function;
  // a tiny one keeps the derived grids small.
  spec.lipschitz_lambda = 1e-6;
  spec.norm_exponent = 2.0;
  spec.description = "zero";
  return spec;
}

PenaltyGame::PenaltyGame(BimatrixGame g, PenaltySpec fr, PenaltySpec fc)
    : game(std::move(g)), penalty_row(std::move(fr)), penalty_col(std::move(fc)) {
  penalty_row.validate();
  penalty_col.validate();
}

ConvexStrategySpace::ConvexStrategySpace(std::vector<std::vector<double>> vertices)
    : vertices_(std::move(vertices)) {
  check(!vertices_.empty(), ErrorCode::InvalidArgument, "space needs n >= 1 vertices");
  const std::size_t dim = vertices_[0].size();
  check(dim >= 1, ErrorCode::InvalidArgument, "vertices need dimension >= 1");
  for (const auto& v : vertices_) {
    check(v.size() == dim, ErrorCode::DimensionMismatch,
          "all vertices must share one dimension");
    for (double c : v)
      check(std::isfinite(c), ErrorCode::OutOfRange, "vertex coordinates must be finite");
  }
  if (dim == vertices_.size()) {
    standard_simplex_ = true;
    for (std::size_t i = 0; i < vertices_.size() && standard_simplex_; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (vertices_[i][j] != (i == j ? 1.0 : 0.0)) {
          standard_simplex_ = false;
          break;
        }
  }
}

ConvexStrategySpace ConvexStrategySpace::simplex(std::size_t n) {
  check(n >= 1, ErrorCode::InvalidArgument, "simplex needs n >= 1");
  std::vector<std::vector<double>> vertices(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) vertices[i][i] = 1.0;
  return ConvexStrategySpace(std::move(vertices));
}

std::vector<double> ConvexStrategySpace::point(std::span<const double> weights) const {
  check(weights.size() == vertices_.size(), ErrorCode::DimensionMismatch,
        "one weight per vertex required");
  if (standard_simplex_) return std::vector<double>(weights.begin(), weights.end());
  std::vector<double> out(dimension(), 0.0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const double w = weights[i];
    if (w == 0.0) continue;
    const auto& v = vertices_[i];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w * v[j];
  }
  return out;
}

double ConvexStrategySpace::max_p_norm(double p) const {
  double best = 0.0;
  for (const auto& v : vertices_) {
    double acc = 0.0;
    for (double c : v) acc += std::pow(std::abs(c), p);
    best = std::max(best, std::pow(acc, 1.0 / p));
  }
  return best;
}

LipschitzGame::LipschitzGame(std::vector<ConvexStrategySpace> s,
                             std::vector<LipschitzUtility> u, double lambda, double p,
                             double g)
    : spaces(std::move(s)),
      utilities(std::move(u)),
      lipschitz_lambda(lambda),
      norm_exponent(p),
      gamma(g) {
  check(!spaces.empty(), ErrorCode::InvalidArgument, "game needs M >= 1 players");
  check(spaces.size() == utilities.size(), ErrorCode::DimensionMismatch,
        "one utility per player required");
  for (const auto& fn : utilities)
    check(static_cast<bool>(fn), ErrorCode::InvalidArgument, "utilities must be set");
  check(std::isfinite(lambda) && lambda > 0.0, ErrorCode::OutOfRange,
        "lambda must be positive and finite");
  check(std::isfinite(p) && p >= 2.0, ErrorCode::OutOfRange, "norm exponent must be >= 2");
  check(std::isfinite(gamma) && gamma > 0.0, ErrorCode::OutOfRange,
        "gamma must be positive and finite");
  for (const auto& space : spaces)
    check(space.max_p_norm(p) <= gamma + 1e-12, ErrorCode::OutOfRange,
          "gamma must bound the p-norm of every declared vertex");
}

double ApproxResult::max_regret() const noexcept {
  double m = 0.0;
  for (double r : regrets) m = std::max(m, r);
  return m;
}

bool is_equilibrium(const LipschitzVerdict& v) noexcept {
  return std::holds_alternative<ApproxResult>(v);
}

const ApproxResult& equilibrium_of(const LipschitzVerdict& v) {
  return std::get<ApproxResult>(v);
}

const NoExactEquilibrium& no_equilibrium_of(const LipschitzVerdict& v) {
  return std::get<NoExactEquilibrium>(v);
}

}  // namespace apxeq
