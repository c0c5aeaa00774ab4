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

#include <cmath>

#include "doctest.h"

#include "core/types.hpp"
#include "core/utility.hpp"
#include "gen/random_game.hpp"

using namespace apxeq;

TEST_CASE("mixed strategy validation") {
  CHECK_NOTHROW(MixedStrategy({0.5, 0.5}));
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.6}), Error);
  CHECK_THROWS_AS(MixedStrategy({-0.1, 1.1}), Error);
  CHECK_THROWS_AS(MixedStrategy({}), Error);
  // 1e-12 sum tolerance, never silently renormalized.
  CHECK_NOTHROW(MixedStrategy({0.5, 0.5 + 5e-13}));
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.5 + 5e-12}), Error);
  CHECK(MixedStrategy::uniform(4)[2] == doctest::Approx(0.25));
  CHECK(MixedStrategy::pure(3, 1)[1] == 1.0);
}

TEST_CASE("payoff matrices validate range") {
  CHECK_THROWS_AS(SquareMatrix(2, {0.0, 0.5, 1.5, 1.0}), Error);
  CHECK_THROWS_AS(SquareMatrix(2, {0.0, 0.5, -0.1, 1.0}), Error);
  CHECK_THROWS_AS(SquareMatrix(2, {0.0, 0.5, 1.0}), Error);
}

TEST_CASE("penalty_value matches the norm definitions") {
  const MixedStrategy p({0.0, 1.0});
  const MixedStrategy x({1.0, 0.0});
  CHECK(penalty_value(p, p, NormKind::L1) == 0.0);
  CHECK(penalty_value(x, p, NormKind::L1) == doctest::Approx(2.0));
  CHECK(penalty_value(x, p, NormKind::L2Sq) == doctest::Approx(2.0));
  CHECK(penalty_value(x, p, NormKind::LInf) == doctest::Approx(1.0));
  const MixedStrategy inner({0.75, 0.25});
  CHECK(penalty_value(inner, p, NormKind::Inner) == doctest::Approx(0.625));
  CHECK_THROWS_AS(penalty_value(x, MixedStrategy::uniform(3), NormKind::L1), Error);
}

TEST_CASE("penalty_value bounds and zero-iff-base") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next() % 7);
    const MixedStrategy x = random_simplex_point(rng, n);
    const MixedStrategy p = random_simplex_point(rng, n);
    CHECK(penalty_value(x, p, NormKind::L1) <= 2.0 + 1e-12);
    CHECK(penalty_value(x, p, NormKind::L2Sq) <= 2.0 + 1e-12);
    CHECK(penalty_value(x, p, NormKind::LInf) <= 1.0 + 1e-12);
    CHECK(penalty_value(x, p, NormKind::Inner) <= 1.0 + 1e-12);
    CHECK(penalty_value(x, p, NormKind::L1) >= 0.0);
    CHECK(penalty_value(x, x, NormKind::L1) == 0.0);
    CHECK(penalty_value(x, x, NormKind::L2Sq) == 0.0);
    CHECK(penalty_value(x, x, NormKind::LInf) == 0.0);
    if (penalty_value(x, p, NormKind::L1) == 0.0)
      for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == p[i]);
  }
}

TEST_CASE("utility_biased examples") {
  const std::size_t n = 2;
  const MixedStrategy p({0.0, 1.0});
  const MixedStrategy x({1.0, 0.0});
  const MixedStrategy y({0.0, 1.0});

  DistanceBiasedGame zeros(BimatrixGame(SquareMatrix::zeros(n), SquareMatrix::zeros(n)),
                           p, p, NormKind::L1, NormKind::L1, 0.3, 0.3);
  CHECK(utility_biased(zeros, p, y, Player::Row) == doctest::Approx(0.0));

  DistanceBiasedGame ones(
      BimatrixGame(SquareMatrix(n, {1, 1, 1, 1}), SquareMatrix::zeros(n)), p, p,
      NormKind::L1, NormKind::L1, 0.3, 0.3);
  CHECK(utility_biased(ones, p, x, Player::Row) == doctest::Approx(1.0));

  DistanceBiasedGame identity(
      BimatrixGame(SquareMatrix(n, {1, 0, 0, 1}), SquareMatrix::zeros(n)), p, p,
      NormKind::L1, NormKind::L1, 0.25, 0.25);
  CHECK(utility_biased(identity, x, y, Player::Row) == doctest::Approx(-0.5));
}

TEST_CASE("penalized utility is concave along the mix toward the base") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next() % 5);
    const DistanceBiasedGame g = generate_random_game(
        n, static_cast<NormKind>(seed % 4), static_cast<NormKind>((seed + 1) % 4),
        rng.next_in(0.0, 1.0), rng.next_in(0.0, 1.0), seed + 1000);
    const MixedStrategy x = random_simplex_point(rng, n);
    const MixedStrategy y = random_simplex_point(rng, n);
    const double delta = rng.next_unit();
    std::vector<double> mixed(n);
    for (std::size_t i = 0; i < n; ++i)
      mixed[i] = delta * g.base_row[i] + (1.0 - delta) * x[i];
    const double lhs = utility_biased(g, MixedStrategy::normalized(mixed), y, Player::Row);
    const double rhs = delta * utility_biased(g, g.base_row, y, Player::Row) +
                       (1.0 - delta) * utility_biased(g, x, y, Player::Row);
    CHECK(lhs >= rhs - 1e-9);
  }
}

TEST_CASE("utility_penalty composes payoff and evaluator") {
  const std::size_t n = 2;
  const BimatrixGame bg(SquareMatrix(n, {1, 0, 0, 1}), SquareMatrix(n, {1, 0, 0, 1}));

  PenaltyGame plain(bg, PenaltySpec::zero(), PenaltySpec::zero());
  const MixedStrategy u = MixedStrategy::uniform(n);
  CHECK(utility_penalty(plain, u, u, Player::Row) == doctest::Approx(0.5));

  PenaltySpec inner;
  inner.evaluator = [](const MixedStrategy& s) {
    return penalty_value(s, s, NormKind::Inner);
  };
  inner.lipschitz_lambda = 2.0;
  inner.norm_exponent = 2.0;
  PenaltyGame biased(bg, inner, PenaltySpec::zero());
  CHECK(utility_penalty(biased, u, u, Player::Row) == doctest::Approx(0.5 - 0.5));

  // Composition identity: an evaluator built from penalty_value subtracts
  // exactly what penalty_value reports.
  const MixedStrategy p({0.25, 0.75});
  PenaltySpec l2;
  l2.evaluator = [p](const MixedStrategy& s) {
    return std::sqrt(penalty_value(s, p, NormKind::L2Sq));
  };
  l2.lipschitz_lambda = 1.0;
  l2.norm_exponent = 2.0;
  PenaltyGame composed(bg, l2, PenaltySpec::zero());
  const MixedStrategy x({0.75, 0.25});
  CHECK(utility_penalty(composed, x, u, Player::Row) ==
        doctest::Approx(0.5 - std::sqrt(penalty_value(x, p, NormKind::L2Sq))));
}

TEST_CASE("regret clamps at zero") {
  CHECK(regret_value(0.5, 0.5) == 0.0);
  CHECK(regret_value(0.9, 0.5) == doctest::Approx(0.4));
  CHECK(regret_value(0.4, 0.5) == 0.0);
}

TEST_CASE("penalty spec validation") {
  PenaltySpec bad;
  bad.evaluator = [](const MixedStrategy&) { return 0.0; };
  bad.lipschitz_lambda = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.lipschitz_lambda = 1.0;
  bad.norm_exponent = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("lipschitz game checks gamma against vertices") {
  std::vector<ConvexStrategySpace> spaces = {ConvexStrategySpace::simplex(2),
                                             ConvexStrategySpace::simplex(2)};
  std::vector<LipschitzUtility> utilities = {
      [](std::span<const std::vector<double>>) { return 0.0; },
      [](std::span<const std::vector<double>>) { return 0.0; }};
  CHECK_THROWS_AS(LipschitzGame(spaces, utilities, 1.0, 2.0, 0.5), Error);
  CHECK_NOTHROW(LipschitzGame(spaces, utilities, 1.0, 2.0, 1.0));
}
