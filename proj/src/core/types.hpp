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

#ifndef APXEQ_CORE_TYPES_HPP
#define APXEQ_CORE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apxeq {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  OutOfRange,
  BudgetExceeded,
  CapExceeded,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Player { Row, Col };

/// Penalty shapes supported by the combinatorial best-response algorithms.
/// Inner means the penalty d*x^T*x; its base strategy is implicitly the zero
/// vector and any supplied base is ignored.
enum class NormKind { L1, L2Sq, LInf, Inner };

const char* norm_name(NormKind norm) noexcept;

/// A point of the probability simplex. Entries must be nonnegative and sum
/// to one within 1e-12; construction validates and never renormalizes.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy uniform(std::size_t n);
  static MixedStrategy pure(std::size_t n, std::size_t index);
  /// Explicitly rescales nonnegative weights to sum one. This is the only
  /// renormalization path; ordinary construction rejects bad sums.
  static MixedStrategy normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::span<const double> span() const noexcept { return probs_; }

  std::size_t support_size(double tol = 1e-12) const noexcept;
  double max_prob() const noexcept;

 private:
  struct Unchecked {};
  MixedStrategy(std::vector<double> probs, Unchecked) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

/// Square payoff matrix with entries in [0,1], stored row-major.
class SquareMatrix {
 public:
  SquareMatrix(std::size_t n, std::vector<double> values);
  static SquareMatrix zeros(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t row, std::size_t col) const noexcept {
    return values_[row * n_ + col];
  }
  const std::vector<double>& values() const noexcept { return values_; }

  /// R*y: expected payoff of each pure row against the mixed column y.
  std::vector<double> row_payoffs(const MixedStrategy& y) const;
  /// C^T*x: expected payoff of each pure column against the mixed row x.
  std::vector<double> col_payoffs(const MixedStrategy& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct BimatrixGame {
  SquareMatrix row_payoff;
  SquareMatrix col_payoff;

  BimatrixGame(SquareMatrix r, SquareMatrix c);
  std::size_t size() const noexcept { return row_payoff.size(); }
};

/// Bimatrix game plus per-player base strategies, penalty norms and weights.
struct DistanceBiasedGame {
  BimatrixGame game;
  MixedStrategy base_row;
  MixedStrategy base_col;
  NormKind norm_row;
  NormKind norm_col;
  double d_row;
  double d_col;

  DistanceBiasedGame(BimatrixGame g, MixedStrategy p, MixedStrategy q,
                     NormKind nr, NormKind nc, double dr, double dc);
  std::size_t size() const noexcept { return game.size(); }
};

/// Black-box penalty with declared Lipschitz data (lambda, norm exponent p).
/// The evaluator must be deterministic and safe for concurrent calls.
struct PenaltySpec {
  std::function<double(const MixedStrategy&)> evaluator;
  double lipschitz_lambda = 0.0;
  double norm_exponent = 2.0;
  std::string description;

  void validate() const;
  static PenaltySpec zero();
};

struct PenaltyGame {
  BimatrixGame game;
  PenaltySpec penalty_row;
  PenaltySpec penalty_col;

  PenaltyGame(BimatrixGame g, PenaltySpec fr, PenaltySpec fc);
  std::size_t size() const noexcept { return game.size(); }
};

/// Convex hull of n vertices in d-dimensional space.
class ConvexStrategySpace {
 public:
  explicit ConvexStrategySpace(std::vector<std::vector<double>> vertices);
  static ConvexStrategySpace simplex(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_[0].size(); }
  const std::vector<std::vector<double>>& vertices() const noexcept { return vertices_; }
  bool is_standard_simplex() const noexcept { return standard_simplex_; }

  /// Point of the hull given vertex weights (weights need not be validated
  /// as a MixedStrategy; callers pass counts/k).
  std::vector<double> point(std::span<const double> weights) const;
  double max_p_norm(double p) const;

 private:
  std::vector<std::vector<double>> vertices_;
  bool standard_simplex_ = false;
};

/// Utility of one player given the full profile of points, one per player.
using LipschitzUtility = std::function<double(std::span<const std::vector<double>>)>;

/// M-player game with convex vertex-hull strategy spaces and black-box
/// utilities that are jointly lambda_p-Lipschitz over the concatenated
/// profile. gamma bounds the p-norm of every feasible strategy point.
struct LipschitzGame {
  std::vector<ConvexStrategySpace> spaces;
  std::vector<LipschitzUtility> utilities;
  double lipschitz_lambda;
  double norm_exponent;
  double gamma;

  LipschitzGame(std::vector<ConvexStrategySpace> s, std::vector<LipschitzUtility> u,
                double lambda, double p, double g);
  std::size_t players() const noexcept { return spaces.size(); }
};

/// Solver output: a profile with measured per-player regrets and the
/// guarantee certified for it (max measured regret, or the analytic bound
/// of the accepting evaluation).
struct ApproxResult {
  std::vector<MixedStrategy> profile;
  std::vector<double> regrets;
  double guarantee = 0.0;
  std::string method;
  double runtime_ms = 0.0;

  double max_regret() const noexcept;
};

struct NoExactEquilibrium {
  std::int64_t k_used = 0;
  std::uint64_t profiles_checked = 0;
};

/// Either a certified approximate equilibrium or the exhaustion verdict.
using LipschitzVerdict = std::variant<ApproxResult, NoExactEquilibrium>;

bool is_equilibrium(const LipschitzVerdict& v) noexcept;
const ApproxResult& equilibrium_of(const LipschitzVerdict& v);
const NoExactEquilibrium& no_equilibrium_of(const LipschitzVerdict& v);

}  // namespace apxeq

#endif  // APXEQ_CORE_TYPES_HPP
