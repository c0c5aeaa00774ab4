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
// Exercises the shared-library surface exactly as an external C client
// would: opaque handles, status codes, and flat buffers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "apxeq.h"

namespace {

struct BiasedGuard {
  apxeq_biased_game* game = nullptr;
  ~BiasedGuard() { apxeq_biased_game_destroy(game); }
};

struct ResultGuard {
  apxeq_result* result = nullptr;
  ~ResultGuard() { apxeq_result_destroy(result); }
};

constexpr double kCoordR[4] = {1.0, 0.0, 0.0, 0.0};
constexpr double kCoordC[4] = {1.0, 0.0, 0.0, 0.0};
constexpr double kEven[2] = {0.5, 0.5};

}  // namespace

TEST_CASE("biased game lifecycle and accessors") {
  BiasedGuard g;
  REQUIRE(apxeq_biased_game_create(2, kCoordR, kCoordC, kEven, kEven, APXEQ_NORM_L1,
                                   APXEQ_NORM_L1, 0.2, 0.3, &g.game) == APXEQ_OK);
  CHECK(apxeq_biased_game_size(g.game) == 2);

  double r[4], c[4], p[2], q[2];
  CHECK(apxeq_biased_game_payoffs(g.game, r, c) == APXEQ_OK);
  CHECK(std::memcmp(r, kCoordR, sizeof r) == 0);
  CHECK(apxeq_biased_game_bases(g.game, p, q) == APXEQ_OK);
  CHECK(p[0] == 0.5);

  apxeq_norm nr, nc;
  double dr, dc;
  CHECK(apxeq_biased_game_params(g.game, &nr, &nc, &dr, &dc) == APXEQ_OK);
  CHECK(nr == APXEQ_NORM_L1);
  CHECK(dr == 0.2);
  CHECK(dc == 0.3);
}

TEST_CASE("invalid inputs map to status codes with messages") {
  apxeq_biased_game* game = nullptr;
  const double bad_payoff[4] = {1.5, 0.0, 0.0, 0.0};
  CHECK(apxeq_biased_game_create(2, bad_payoff, kCoordC, kEven, kEven, APXEQ_NORM_L1,
                                 APXEQ_NORM_L1, 0.2, 0.3, &game) == APXEQ_ERR_RANGE);
  CHECK(std::string(apxeq_last_error()).find("[0,1]") != std::string::npos);

  const double bad_base[2] = {0.7, 0.7};
  CHECK(apxeq_biased_game_create(2, kCoordR, kCoordC, bad_base, kEven, APXEQ_NORM_L1,
                                 APXEQ_NORM_L1, 0.2, 0.3, &game) == APXEQ_ERR_RANGE);
  CHECK(apxeq_biased_game_create(2, nullptr, kCoordC, kEven, kEven, APXEQ_NORM_L1,
                                 APXEQ_NORM_L1, 0.2, 0.3, &game) ==
        APXEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("solve_base returns a result handle with regrets") {
  BiasedGuard g;
  REQUIRE(apxeq_biased_game_create(2, kCoordR, kCoordC, kEven, kEven, APXEQ_NORM_L1,
                                   APXEQ_NORM_L1, 0.2, 0.2, &g.game) == APXEQ_OK);
  ResultGuard r;
  REQUIRE(apxeq_solve_base(g.game, &r.result) == APXEQ_OK);
  CHECK(apxeq_result_get_kind(r.result) == APXEQ_RESULT_APPROX);
  CHECK(apxeq_result_players(r.result) == 2);
  double regrets[2];
  CHECK(apxeq_result_regrets(r.result, regrets) == APXEQ_OK);
  CHECK(apxeq_result_guarantee(r.result) <= 2.0 / 3.0 + 1e-9);
  CHECK(apxeq_result_guarantee(r.result) >= std::max(regrets[0], regrets[1]) - 1e-12);
  std::vector<double> strategy(apxeq_result_strategy_len(r.result, 0));
  REQUIRE(strategy.size() == 2);
  CHECK(apxeq_result_strategy(r.result, 0, strategy.data()) == APXEQ_OK);
  CHECK(std::string(apxeq_result_method(r.result)).rfind("base/", 0) == 0);
}

TEST_CASE("measured regrets and delta through the C surface") {
  BiasedGuard g;
  REQUIRE(apxeq_biased_game_create(2, kCoordR, kCoordC, kEven, kEven, APXEQ_NORM_L2SQ,
                                   APXEQ_NORM_L2SQ, 1.0, 1.0, &g.game) == APXEQ_OK);
  double delta = 0.0;
  CHECK(apxeq_choose_delta(g.game, &delta) == APXEQ_OK);
  CHECK(delta == doctest::Approx(5.0 / 7.0));

  double strategy[2], value = 0.0;
  CHECK(apxeq_best_response_biased(g.game, APXEQ_ROW, kEven, strategy, &value) == APXEQ_OK);
  double oracle_strategy[2], oracle_value = 0.0;
  CHECK(apxeq_best_response_oracle(g.game, APXEQ_ROW, kEven, 300, oracle_strategy,
                                   &oracle_value) == APXEQ_OK);
  CHECK(value == doctest::Approx(oracle_value).epsilon(1e-9));

  double rr, cr;
  CHECK(apxeq_measure_regrets(g.game, kEven, kEven, &rr, &cr) == APXEQ_OK);
  CHECK(rr >= 0.0);
  double w = -1.0;
  CHECK(apxeq_wsne_quality(g.game, kEven, kEven, &w) == APXEQ_OK);
  CHECK(w >= 0.0);
}

namespace {
extern "C" double zero_penalty(const double*, size_t, void*) { return 0.0; }
extern "C" double inner_penalty(const double* x, size_t n, void*) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}
}  // namespace

TEST_CASE("penalty game with callbacks solves through qptas") {
  apxeq_penalty_game* game = nullptr;
  REQUIRE(apxeq_penalty_game_create(2, kCoordR, kCoordC, zero_penalty, nullptr, 1e-6, 2.0,
                                    zero_penalty, nullptr, 1e-6, 2.0,
                                    &game) == APXEQ_OK);
  ResultGuard r;
  REQUIRE(apxeq_solve_qptas(game, 0.25, 0, 1, 0, &r.result) == APXEQ_OK);
  CHECK(apxeq_result_get_kind(r.result) == APXEQ_RESULT_EQUILIBRIUM);
  CHECK(apxeq_result_guarantee(r.result) <= 0.75 + 1e-9);
  double strategy[2];
  CHECK(apxeq_result_strategy(r.result, 0, strategy) == APXEQ_OK);
  CHECK(strategy[0] == doctest::Approx(1.0));
  apxeq_penalty_game_destroy(game);
}

TEST_CASE("penalty best response accepts custom evaluators") {
  apxeq_penalty_game* game = nullptr;
  const double r_payoff[4] = {1.0, 1.0, 0.0, 0.0};
  REQUIRE(apxeq_penalty_game_create(2, r_payoff, kCoordC, inner_penalty, nullptr, 2.0, 2.0,
                                    zero_penalty, nullptr, 1e-6, 2.0,
                                    &game) == APXEQ_OK);
  double strategy[2], value = 0.0;
  REQUIRE(apxeq_penalty_best_response(game, APXEQ_ROW, kEven, 0.05, 1, strategy, &value) ==
          APXEQ_OK);
  // Exact optimum is (0.75, 0.25) worth 0.125.
  CHECK(value >= 0.125 - 0.05);
  CHECK(value <= 0.125 + 1e-12);
  apxeq_penalty_game_destroy(game);
}

TEST_CASE("biased games wrap into penalty games") {
  BiasedGuard g;
  REQUIRE(apxeq_biased_game_create(2, kCoordR, kCoordC, kEven, kEven, APXEQ_NORM_L2SQ,
                                   APXEQ_NORM_L2SQ, 1.0, 1.0, &g.game) == APXEQ_OK);
  apxeq_penalty_game* penalty = nullptr;
  REQUIRE(apxeq_penalty_game_from_biased(g.game, &penalty) == APXEQ_OK);
  ResultGuard r;
  REQUIRE(apxeq_solve_qptas(penalty, 0.4, 8, 2, 2e8, &r.result) == APXEQ_OK);
  CHECK(apxeq_result_get_kind(r.result) == APXEQ_RESULT_EQUILIBRIUM);
  apxeq_penalty_game_destroy(penalty);
}

namespace {
struct BilinearCtx {
  const double* matrix;
  size_t n;
};
extern "C" double bilinear_utility(const double* const* points, const size_t* dims,
                                   size_t players, void* user) {
  (void)players;
  const auto* ctx = static_cast<const BilinearCtx*>(user);
  double acc = 0.0;
  for (size_t i = 0; i < dims[0]; ++i)
    for (size_t j = 0; j < dims[1]; ++j)
      acc += points[0][i] * ctx->matrix[i * ctx->n + j] * points[1][j];
  return acc;
}
}  // namespace

TEST_CASE("lipschitz game via the C surface") {
  const size_t n_vertices[2] = {2, 2};
  const size_t dims[2] = {2, 2};
  const double simplex[4] = {1.0, 0.0, 0.0, 1.0};
  const double* vertices[2] = {simplex, simplex};
  BilinearCtx row_ctx{kCoordR, 2}, col_ctx{kCoordC, 2};
  const apxeq_utility_fn fns[2] = {bilinear_utility, bilinear_utility};
  void* users[2] = {&row_ctx, &col_ctx};

  apxeq_lipschitz_game* game = nullptr;
  REQUIRE(apxeq_lipschitz_game_create(2, n_vertices, dims, vertices, fns, users, 2.0, 2.0,
                                      1.0, &game) == APXEQ_OK);

  const double e1[2] = {1.0, 0.0};
  const double* profile[2] = {e1, e1};
  double alpha = 0.0;
  CHECK(apxeq_evaluate_guarantee(game, profile, 0.05, 1, &alpha) == APXEQ_OK);
  CHECK(alpha == doctest::Approx(0.05));

  ResultGuard r;
  REQUIRE(apxeq_solve_lipschitz(game, 0.3, 2, 2, 0, &r.result) == APXEQ_OK);
  CHECK(apxeq_result_get_kind(r.result) == APXEQ_RESULT_EQUILIBRIUM);
  apxeq_lipschitz_game_destroy(game);
}

TEST_CASE("budget errors surface through the status code") {
  BiasedGuard g;
  const double pennies_r[4] = {1.0, 0.0, 0.0, 1.0};
  const double pennies_c[4] = {0.0, 1.0, 1.0, 0.0};
  REQUIRE(apxeq_biased_game_create(2, pennies_r, pennies_c, kEven, kEven, APXEQ_NORM_L1,
                                   APXEQ_NORM_L1, 0.1, 0.1, &g.game) == APXEQ_OK);
  apxeq_penalty_game* penalty = nullptr;
  REQUIRE(apxeq_penalty_game_from_biased(g.game, &penalty) == APXEQ_OK);
  apxeq_result* result = nullptr;
  CHECK(apxeq_solve_qptas(penalty, 0.005, 0, 1, 0, &result) == APXEQ_ERR_BUDGET);
  CHECK(std::string(apxeq_last_error()).find("budget") != std::string::npos);
  apxeq_penalty_game_destroy(penalty);
}

TEST_CASE("no-exact-equilibrium verdict carries its counters") {
  const double pennies_r[4] = {1.0, 0.0, 0.0, 1.0};
  const double pennies_c[4] = {0.0, 1.0, 1.0, 0.0};
  apxeq_penalty_game* game = nullptr;
  REQUIRE(apxeq_penalty_game_create(2, pennies_r, pennies_c, zero_penalty, nullptr, 1e-6,
                                    2.0, zero_penalty, nullptr, 1e-6, 2.0,
                                    &game) == APXEQ_OK);
  ResultGuard r;
  REQUIRE(apxeq_solve_qptas(game, 0.1, 1, 1, 0, &r.result) == APXEQ_OK);
  CHECK(apxeq_result_get_kind(r.result) == APXEQ_RESULT_NO_EXACT_EQUILIBRIUM);
  CHECK(apxeq_result_k_used(r.result) == 1);
  CHECK(apxeq_result_profiles_checked(r.result) == 4);
  apxeq_penalty_game_destroy(game);
}

TEST_CASE("parameter selectors and the generator stream") {
  int64_t value = 0;
  CHECK(apxeq_k_for_lipschitz(2, 1, 2, 1, 0.5, &value) == APXEQ_OK);
  CHECK(value == 512);
  CHECK(apxeq_l_for_regret(1, 2, 1, 0.1, &value) == APXEQ_OK);
  CHECK(value == 800);
  CHECK(apxeq_k_for_penalty(10, 1, 2, 0.5, 0, &value) == APXEQ_OK);
  CHECK(value == 2049);
  CHECK(apxeq_l_for_penalty_br(1, 4, 0.5, &value) == APXEQ_OK);
  CHECK(value == 136);
  CHECK(apxeq_k_for_penalty(10, 1, 2, 1e-9, 0, nullptr) == APXEQ_ERR_INVALID_ARGUMENT);
  CHECK(apxeq_k_for_penalty(10, 1, 2, 1e-9, 0, &value) == APXEQ_ERR_CAP);

  uint64_t state = 7;
  const uint64_t a = apxeq_splitmix64_next(&state);
  uint64_t state2 = 7;
  CHECK(apxeq_splitmix64_next(&state2) == a);

  apxeq_biased_game* g1 = nullptr;
  apxeq_biased_game* g2 = nullptr;
  REQUIRE(apxeq_generate_random_game(3, APXEQ_NORM_L1, APXEQ_NORM_L1, 0.2, 0.2, 11, &g1) ==
          APXEQ_OK);
  REQUIRE(apxeq_generate_random_game(3, APXEQ_NORM_L1, APXEQ_NORM_L1, 0.2, 0.2, 11, &g2) ==
          APXEQ_OK);
  double r1[9], c1[9], r2[9], c2[9];
  apxeq_biased_game_payoffs(g1, r1, c1);
  apxeq_biased_game_payoffs(g2, r2, c2);
  CHECK(std::memcmp(r1, r2, sizeof r1) == 0);
  apxeq_biased_game_destroy(g1);
  apxeq_biased_game_destroy(g2);
}
