/* Copyright 2026 The apxeq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the apxeq solver library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an apxeq_status; on failure a thread-local
 * message with details is available from apxeq_last_error(). Strategies and
 * matrices cross the boundary as dense double arrays (matrices row-major).
 * Handles are immutable after creation and safe to share across threads.
 */

#ifndef APXEQ_H
#define APXEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apxeq_status {
  APXEQ_OK = 0,
  APXEQ_ERR_INVALID_ARGUMENT = 1,
  APXEQ_ERR_DIMENSION = 2,
  APXEQ_ERR_RANGE = 3,       /* value outside its documented domain */
  APXEQ_ERR_BUDGET = 4,      /* projected search work exceeds the budget */
  APXEQ_ERR_CAP = 5,         /* parameter selector exceeded its cap */
  APXEQ_ERR_UNSUPPORTED = 6,
  APXEQ_ERR_INTERNAL = 7
} apxeq_status;

typedef enum apxeq_norm {
  APXEQ_NORM_L1 = 0,
  APXEQ_NORM_L2SQ = 1,
  APXEQ_NORM_LINF = 2,
  APXEQ_NORM_INNER = 3 /* penalty d*x^T*x; the base strategy is ignored */
} apxeq_norm;

typedef enum apxeq_player { APXEQ_ROW = 0, APXEQ_COL = 1 } apxeq_player;

typedef enum apxeq_result_kind {
  APXEQ_RESULT_APPROX = 0,          /* profile with measured regrets */
  APXEQ_RESULT_EQUILIBRIUM = 1,     /* accepted by a guarantee evaluation */
  APXEQ_RESULT_NO_EXACT_EQUILIBRIUM = 2
} apxeq_result_kind;

typedef struct apxeq_biased_game apxeq_biased_game;
typedef struct apxeq_penalty_game apxeq_penalty_game;
typedef struct apxeq_lipschitz_game apxeq_lipschitz_game;
typedef struct apxeq_result apxeq_result;

/* Version string of the library, static storage. */
const char* apxeq_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* apxeq_last_error(void);

/* ------------------------------------------------------------------ */
/* Distance-biased games                                               */
/* ------------------------------------------------------------------ */

/* R and C are n*n row-major with entries in [0,1]; base strategies are
 * points of the n-simplex; d_row/d_col are nonnegative penalty weights. */
apxeq_status apxeq_biased_game_create(size_t n, const double* row_payoff,
                                      const double* col_payoff, const double* base_row,
                                      const double* base_col, apxeq_norm norm_row,
                                      apxeq_norm norm_col, double d_row, double d_col,
                                      apxeq_biased_game** out);
void apxeq_biased_game_destroy(apxeq_biased_game* game);

/* Seeded generator: payoffs i.i.d. uniform [0,1), bases uniform on the
 * simplex, SplitMix64 stream (see README), deterministic in the seed. */
apxeq_status apxeq_generate_random_game(size_t n, apxeq_norm norm_row,
                                        apxeq_norm norm_col, double d_row, double d_col,
                                        uint64_t seed, apxeq_biased_game** out);

size_t apxeq_biased_game_size(const apxeq_biased_game* game);
/* Buffers must hold n*n (matrices) or n (bases) doubles. */
apxeq_status apxeq_biased_game_payoffs(const apxeq_biased_game* game, double* row_payoff,
                                       double* col_payoff);
apxeq_status apxeq_biased_game_bases(const apxeq_biased_game* game, double* base_row,
                                     double* base_col);
apxeq_status apxeq_biased_game_params(const apxeq_biased_game* game, apxeq_norm* norm_row,
                                      apxeq_norm* norm_col, double* d_row, double* d_col);

/* Mixing weight the base algorithm uses for this game. */
apxeq_status apxeq_choose_delta(const apxeq_biased_game* game, double* out);

/* Base algorithm (dominance shortcut first). */
apxeq_status apxeq_solve_base(const apxeq_biased_game* game, apxeq_result** out);

/* Exact combinatorial best response against `against` (length n); writes
 * the strategy to out_strategy (length n) and its penalized utility. */
apxeq_status apxeq_best_response_biased(const apxeq_biased_game* game, apxeq_player player,
                                        const double* against, double* out_strategy,
                                        double* out_utility);

/* Brute-force reference best response: 2^n support enumeration for the
 * quadratic norms, an l-uniform grid scan (grid_l points per unit) for L1
 * and LInf. Exists for cross-checking the combinatorial algorithms. */
apxeq_status apxeq_best_response_oracle(const apxeq_biased_game* game, apxeq_player player,
                                        const double* against, int64_t grid_l,
                                        double* out_strategy, double* out_utility);

/* Exact per-player regrets at (x, y), clamped at zero. */
apxeq_status apxeq_measure_regrets(const apxeq_biased_game* game, const double* x,
                                   const double* y, double* row_regret, double* col_regret);

/* Largest supported-strategy payoff shortfall in the unbiased game. */
apxeq_status apxeq_wsne_quality(const apxeq_biased_game* game, const double* x,
                                const double* y, double* out);

/* ------------------------------------------------------------------ */
/* Penalty games                                                       */
/* ------------------------------------------------------------------ */

/* Deterministic penalty evaluator; must be safe for concurrent calls. */
typedef double (*apxeq_penalty_fn)(const double* strategy, size_t n, void* user_data);

apxeq_status apxeq_penalty_game_create(size_t n, const double* row_payoff,
                                       const double* col_payoff, apxeq_penalty_fn row_fn,
                                       void* row_user, double row_lambda, double row_p,
                                       apxeq_penalty_fn col_fn, void* col_user,
                                       double col_lambda, double col_p,
                                       apxeq_penalty_game** out);

/* Poses a biased game as a penalty game with derived Lipschitz constants. */
apxeq_status apxeq_penalty_game_from_biased(const apxeq_biased_game* game,
                                            apxeq_penalty_game** out);
void apxeq_penalty_game_destroy(apxeq_penalty_game* game);

/* Best l-uniform reply (l from the player's declared lambda and p); the
 * value is within epsilon of the exact best-response value. */
apxeq_status apxeq_penalty_best_response(const apxeq_penalty_game* game,
                                         apxeq_player player, const double* against,
                                         double epsilon, int workers,
                                         double* out_strategy, double* out_value);

/* Scans all k-uniform pairs; k_override <= 0 selects k automatically and
 * budget <= 0 keeps the default. Returns APXEQ_RESULT_EQUILIBRIUM (a
 * 3*epsilon-equilibrium) or APXEQ_RESULT_NO_EXACT_EQUILIBRIUM. */
apxeq_status apxeq_solve_qptas(const apxeq_penalty_game* game, double epsilon,
                               int64_t k_override, int workers, double budget,
                               apxeq_result** out);

/* ------------------------------------------------------------------ */
/* Lipschitz games                                                     */
/* ------------------------------------------------------------------ */

/* Utility of one player at a profile of strategy points. points[i] has
 * dims[i] doubles. Must be deterministic and safe for concurrent calls. */
typedef double (*apxeq_utility_fn)(const double* const* points, const size_t* dims,
                                   size_t players, void* user_data);

/* vertices[i] is an n_vertices[i] x dims[i] row-major array of the vertex
 * coordinates of player i's strategy space. lambda is the joint Lipschitz
 * constant in the L_p norm (p >= 2) and gamma bounds every vertex p-norm. */
apxeq_status apxeq_lipschitz_game_create(size_t players, const size_t* n_vertices,
                                         const size_t* dims, const double* const* vertices,
                                         const apxeq_utility_fn* utilities,
                                         void* const* user_data, double lambda, double p,
                                         double gamma, apxeq_lipschitz_game** out);
void apxeq_lipschitz_game_destroy(apxeq_lipschitz_game* game);

/* Additive delta-approximation of the profile's guarantee; points[i] has
 * the dimension of player i's space. */
apxeq_status apxeq_evaluate_guarantee(const apxeq_lipschitz_game* game,
                                      const double* const* points, double delta,
                                      int workers, double* out);

apxeq_status apxeq_solve_lipschitz(const apxeq_lipschitz_game* game, double epsilon,
                                   int64_t k_override, int workers, double budget,
                                   apxeq_result** out);

/* ------------------------------------------------------------------ */
/* Results                                                             */
/* ------------------------------------------------------------------ */

apxeq_result_kind apxeq_result_get_kind(const apxeq_result* result);
size_t apxeq_result_players(const apxeq_result* result);
size_t apxeq_result_strategy_len(const apxeq_result* result, size_t player);
apxeq_status apxeq_result_strategy(const apxeq_result* result, size_t player, double* out);
/* One regret per player. */
apxeq_status apxeq_result_regrets(const apxeq_result* result, double* out);
double apxeq_result_guarantee(const apxeq_result* result);
const char* apxeq_result_method(const apxeq_result* result);
double apxeq_result_runtime_ms(const apxeq_result* result);
/* Meaningful for APXEQ_RESULT_NO_EXACT_EQUILIBRIUM only. */
int64_t apxeq_result_k_used(const apxeq_result* result);
uint64_t apxeq_result_profiles_checked(const apxeq_result* result);
void apxeq_result_destroy(apxeq_result* result);

/* ------------------------------------------------------------------ */
/* Parameter selectors                                                 */
/* ------------------------------------------------------------------ */

apxeq_status apxeq_k_for_lipschitz(double players, double lambda, double p, double gamma,
                                   double epsilon, int64_t* out);
apxeq_status apxeq_l_for_regret(double lambda, double p, double gamma, double delta,
                                int64_t* out);
/* cap <= 0 keeps the default cap of 10^9. */
apxeq_status apxeq_k_for_penalty(size_t n, double lambda, double p, double epsilon,
                                 int64_t cap, int64_t* out);
apxeq_status apxeq_l_for_penalty_br(double lambda, double p, double epsilon, int64_t* out);

/* SplitMix64 step, exposed so callers can reproduce library streams. */
uint64_t apxeq_splitmix64_next(uint64_t* state);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* APXEQ_H */
