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

#include "apxeq.h"

#include <cmath>
#include <cstring>
#include <string>

#include "approx/base_algorithm.hpp"
#include "biased/best_response.hpp"
#include "core/types.hpp"
#include "core/utility.hpp"
#include "gen/random_game.hpp"
#include "lipschitz/search.hpp"
#include "oracle/oracle.hpp"
#include "penalty/qptas.hpp"
#include "uniform/selectors.hpp"

struct apxeq_biased_game {
  apxeq::DistanceBiasedGame game;
};

struct apxeq_penalty_game {
  apxeq::PenaltyGame game;
};

struct apxeq_lipschitz_game {
  apxeq::LipschitzGame game;
};

struct apxeq_result {
  apxeq_result_kind kind = APXEQ_RESULT_APPROX;
  apxeq::ApproxResult value;
  apxeq::NoExactEquilibrium verdict;
};

namespace {

thread_local std::string t_last_error;

apxeq_status status_of(const apxeq::Error& e) {
  switch (e.code()) {
    case apxeq::ErrorCode::InvalidArgument: return APXEQ_ERR_INVALID_ARGUMENT;
    case apxeq::ErrorCode::DimensionMismatch: return APXEQ_ERR_DIMENSION;
    case apxeq::ErrorCode::OutOfRange: return APXEQ_ERR_RANGE;
    case apxeq::ErrorCode::BudgetExceeded: return APXEQ_ERR_BUDGET;
    case apxeq::ErrorCode::CapExceeded: return APXEQ_ERR_CAP;
    case apxeq::ErrorCode::Unsupported: return APXEQ_ERR_UNSUPPORTED;
  }
  return APXEQ_ERR_INTERNAL;
}

/// Runs fn, translating exceptions into status codes + the thread-local
/// error message.
template <typename Fn>
apxeq_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return APXEQ_OK;
  } catch (const apxeq::Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return APXEQ_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return APXEQ_ERR_INTERNAL;
  }
}

apxeq::NormKind to_norm(apxeq_norm norm) {
  switch (norm) {
    case APXEQ_NORM_L1: return apxeq::NormKind::L1;
    case APXEQ_NORM_L2SQ: return apxeq::NormKind::L2Sq;
    case APXEQ_NORM_LINF: return apxeq::NormKind::LInf;
    case APXEQ_NORM_INNER: return apxeq::NormKind::Inner;
  }
  throw apxeq::Error(apxeq::ErrorCode::InvalidArgument, "unknown norm tag");
}

apxeq_norm from_norm(apxeq::NormKind norm) {
  switch (norm) {
    case apxeq::NormKind::L1: return APXEQ_NORM_L1;
    case apxeq::NormKind::L2Sq: return APXEQ_NORM_L2SQ;
    case apxeq::NormKind::LInf: return APXEQ_NORM_LINF;
    case apxeq::NormKind::Inner: return APXEQ_NORM_INNER;
  }
  return APXEQ_NORM_L1;
}

apxeq::Player to_player(apxeq_player player) {
  if (player == APXEQ_ROW) return apxeq::Player::Row;
  if (player == APXEQ_COL) return apxeq::Player::Col;
  throw apxeq::Error(apxeq::ErrorCode::InvalidArgument, "unknown player tag");
}

void require(bool ok, const char* what) {
  if (!ok) throw apxeq::Error(apxeq::ErrorCode::InvalidArgument, what);
}

apxeq::MixedStrategy strategy_from(const double* data, std::size_t n, const char* what) {
  require(data != nullptr, what);
  return apxeq::MixedStrategy(std::vector<double>(data, data + n));
}

apxeq_result* wrap(apxeq::ApproxResult result, apxeq_result_kind kind) {
  auto* out = new apxeq_result;
  out->kind = kind;
  out->value = std::move(result);
  return out;
}

apxeq_result* wrap(apxeq::LipschitzVerdict verdict) {
  if (apxeq::is_equilibrium(verdict))
    return wrap(std::move(std::get<apxeq::ApproxResult>(verdict)),
                APXEQ_RESULT_EQUILIBRIUM);
  auto* out = new apxeq_result;
  out->kind = APXEQ_RESULT_NO_EXACT_EQUILIBRIUM;
  out->verdict = apxeq::no_equilibrium_of(verdict);
  return out;
}

apxeq::SearchOptions search_options(std::int64_t k_override, int workers, double budget) {
  apxeq::SearchOptions options;
  if (k_override > 0) options.k_override = k_override;
  options.workers = workers < 1 ? 1 : workers;
  if (budget > 0) options.budget = budget;
  return options;
}

/// Lipschitz constants of the built-in biased penalties over the simplex
/// (L_2 geometry): ||.||_1 gains at most sqrt(n) per unit of L2 movement,
/// ||.||_2^2 at most 2*sqrt(2), ||.||_inf at most 1, x^T x at most 2.
double biased_penalty_lambda(apxeq::NormKind norm, double d, std::size_t n) {
  double factor = 1.0;
  switch (norm) {
    case apxeq::NormKind::L1: factor = std::sqrt(static_cast<double>(n)); break;
    case apxeq::NormKind::L2Sq: factor = 2.0 * std::sqrt(2.0); break;
    case apxeq::NormKind::LInf: factor = 1.0; break;
    case apxeq::NormKind::Inner: factor = 2.0; break;
  }
  const double lambda = d * factor;
  return lambda > 0.0 ? lambda : 1e-6;
}

}  // namespace

extern "C" {

const char* apxeq_version(void) { return "0.1.0"; }

const char* apxeq_last_error(void) { return t_last_error.c_str(); }

apxeq_status apxeq_biased_game_create(size_t n, const double* row_payoff,
                                      const double* col_payoff, const double* base_row,
                                      const double* base_col, apxeq_norm norm_row,
                                      apxeq_norm norm_col, double d_row, double d_col,
                                      apxeq_biased_game** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(n >= 1 && row_payoff && col_payoff && base_row && base_col,
            "null input array");
    apxeq::BimatrixGame bimatrix(
        apxeq::SquareMatrix(n, std::vector<double>(row_payoff, row_payoff + n * n)),
        apxeq::SquareMatrix(n, std::vector<double>(col_payoff, col_payoff + n * n)));
    *out = new apxeq_biased_game{apxeq::DistanceBiasedGame(
        std::move(bimatrix), strategy_from(base_row, n, "base_row"),
        strategy_from(base_col, n, "base_col"), to_norm(norm_row), to_norm(norm_col),
        d_row, d_col)};
  });
}

void apxeq_biased_game_destroy(apxeq_biased_game* game) { delete game; }

apxeq_status apxeq_generate_random_game(size_t n, apxeq_norm norm_row,
                                        apxeq_norm norm_col, double d_row, double d_col,
                                        uint64_t seed, apxeq_biased_game** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new apxeq_biased_game{apxeq::generate_random_game(
        n, to_norm(norm_row), to_norm(norm_col), d_row, d_col, seed)};
  });
}

size_t apxeq_biased_game_size(const apxeq_biased_game* game) {
  return game ? game->game.size() : 0;
}

apxeq_status apxeq_biased_game_payoffs(const apxeq_biased_game* game, double* row_payoff,
                                       double* col_payoff) {
  return guarded([&] {
    require(game && row_payoff && col_payoff, "null argument");
    const auto& r = game->game.game.row_payoff.values();
    const auto& c = game->game.game.col_payoff.values();
    std::memcpy(row_payoff, r.data(), r.size() * sizeof(double));
    std::memcpy(col_payoff, c.data(), c.size() * sizeof(double));
  });
}

apxeq_status apxeq_biased_game_bases(const apxeq_biased_game* game, double* base_row,
                                     double* base_col) {
  return guarded([&] {
    require(game && base_row && base_col, "null argument");
    const auto& p = game->game.base_row.probs();
    const auto& q = game->game.base_col.probs();
    std::memcpy(base_row, p.data(), p.size() * sizeof(double));
    std::memcpy(base_col, q.data(), q.size() * sizeof(double));
  });
}

apxeq_status apxeq_biased_game_params(const apxeq_biased_game* game, apxeq_norm* norm_row,
                                      apxeq_norm* norm_col, double* d_row, double* d_col) {
  return guarded([&] {
    require(game && norm_row && norm_col && d_row && d_col, "null argument");
    *norm_row = from_norm(game->game.norm_row);
    *norm_col = from_norm(game->game.norm_col);
    *d_row = game->game.d_row;
    *d_col = game->game.d_col;
  });
}

apxeq_status apxeq_choose_delta(const apxeq_biased_game* game, double* out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = apxeq::choose_delta(game->game);
  });
}

apxeq_status apxeq_solve_base(const apxeq_biased_game* game, apxeq_result** out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = wrap(apxeq::base_algorithm(game->game), APXEQ_RESULT_APPROX);
  });
}

apxeq_status apxeq_best_response_biased(const apxeq_biased_game* game, apxeq_player player,
                                        const double* against, double* out_strategy,
                                        double* out_utility) {
  return guarded([&] {
    require(game && against && out_strategy && out_utility, "null argument");
    const std::size_t n = game->game.size();
    const apxeq::MixedStrategy opponent = strategy_from(against, n, "against");
    const apxeq::Player who = to_player(player);
    const apxeq::MixedStrategy reply = apxeq::best_response(game->game, who, opponent);
    *out_utility = who == apxeq::Player::Row
                       ? apxeq::utility_biased(game->game, reply, opponent, who)
                       : apxeq::utility_biased(game->game, opponent, reply, who);
    std::memcpy(out_strategy, reply.probs().data(), n * sizeof(double));
  });
}

apxeq_status apxeq_best_response_oracle(const apxeq_biased_game* game, apxeq_player player,
                                        const double* against, int64_t grid_l,
                                        double* out_strategy, double* out_utility) {
  return guarded([&] {
    require(game && against && out_strategy && out_utility, "null argument");
    const std::size_t n = game->game.size();
    const apxeq::MixedStrategy opponent = strategy_from(against, n, "against");
    const apxeq::Player who = to_player(player);
    const apxeq::DistanceBiasedGame& g = game->game;
    const apxeq::NormKind norm = who == apxeq::Player::Row ? g.norm_row : g.norm_col;
    const double d = who == apxeq::Player::Row ? g.d_row : g.d_col;
    const apxeq::MixedStrategy& base =
        who == apxeq::Player::Row ? g.base_row : g.base_col;
    const std::vector<double> payoffs = who == apxeq::Player::Row
                                            ? g.game.row_payoff.row_payoffs(opponent)
                                            : g.game.col_payoff.col_payoffs(opponent);
    apxeq::MixedStrategy reply = apxeq::MixedStrategy::uniform(n);
    if ((norm == apxeq::NormKind::L2Sq || norm == apxeq::NormKind::Inner) && d > 0.0) {
      const std::vector<double> zeros(n, 0.0);
      reply = apxeq::exhaustive_quadratic_br(
          payoffs, norm == apxeq::NormKind::Inner ? std::span<const double>(zeros)
                                                  : base.span(),
          d);
    } else {
      const apxeq::GridBest best = apxeq::grid_best_response(
          [&](const apxeq::MixedStrategy& x) {
            return apxeq::dot(x.span(), payoffs) -
                   d * apxeq::penalty_value(x, base, norm);
          },
          n, grid_l > 0 ? grid_l : 300);
      reply = best.argmax.to_strategy();
    }
    *out_utility = apxeq::dot(reply.span(), payoffs) -
                   d * apxeq::penalty_value(reply, base, norm);
    std::memcpy(out_strategy, reply.probs().data(), n * sizeof(double));
  });
}

apxeq_status apxeq_measure_regrets(const apxeq_biased_game* game, const double* x,
                                   const double* y, double* row_regret,
                                   double* col_regret) {
  return guarded([&] {
    require(game && x && y && row_regret && col_regret, "null argument");
    const std::size_t n = game->game.size();
    const auto [rr, cr] = apxeq::measure_regrets(
        game->game, strategy_from(x, n, "x"), strategy_from(y, n, "y"));
    *row_regret = rr;
    *col_regret = cr;
  });
}

apxeq_status apxeq_wsne_quality(const apxeq_biased_game* game, const double* x,
                                const double* y, double* out) {
  return guarded([&] {
    require(game && x && y && out, "null argument");
    const std::size_t n = game->game.size();
    *out = apxeq::wsne_quality(game->game.game, strategy_from(x, n, "x"),
                               strategy_from(y, n, "y"));
  });
}

apxeq_status apxeq_penalty_game_create(size_t n, const double* row_payoff,
                                       const double* col_payoff, apxeq_penalty_fn row_fn,
                                       void* row_user, double row_lambda, double row_p,
                                       apxeq_penalty_fn col_fn, void* col_user,
                                       double col_lambda, double col_p,
                                       apxeq_penalty_game** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(n >= 1 && row_payoff && col_payoff && row_fn && col_fn, "null input");
    apxeq::BimatrixGame bimatrix(
        apxeq::SquareMatrix(n, std::vector<double>(row_payoff, row_payoff + n * n)),
        apxeq::SquareMatrix(n, std::vector<double>(col_payoff, col_payoff + n * n)));
    auto make_spec = [](apxeq_penalty_fn fn, void* user, double lambda, double p) {
      apxeq::PenaltySpec spec;
      spec.evaluator = [fn, user](const apxeq::MixedStrategy& s) {
        return fn(s.probs().data(), s.size(), user);
      };
      spec.lipschitz_lambda = lambda;
      spec.norm_exponent = p;
      spec.description = "callback";
      return spec;
    };
    *out = new apxeq_penalty_game{apxeq::PenaltyGame(
        std::move(bimatrix), make_spec(row_fn, row_user, row_lambda, row_p),
        make_spec(col_fn, col_user, col_lambda, col_p))};
  });
}

apxeq_status apxeq_penalty_game_from_biased(const apxeq_biased_game* game,
                                            apxeq_penalty_game** out) {
  return guarded([&] {
    require(game && out, "null argument");
    const apxeq::DistanceBiasedGame& g = game->game;
    auto make_spec = [&](apxeq::NormKind norm, const apxeq::MixedStrategy& base,
                         double d) {
      apxeq::PenaltySpec spec;
      spec.evaluator = [norm, base, d](const apxeq::MixedStrategy& s) {
        return d * apxeq::penalty_value(s, base, norm);
      };
      spec.lipschitz_lambda = biased_penalty_lambda(norm, d, g.size());
      spec.norm_exponent = 2.0;
      spec.description = std::string("biased/") + apxeq::norm_name(norm);
      return spec;
    };
    *out = new apxeq_penalty_game{apxeq::PenaltyGame(
        g.game, make_spec(g.norm_row, g.base_row, g.d_row),
        make_spec(g.norm_col, g.base_col, g.d_col))};
  });
}

void apxeq_penalty_game_destroy(apxeq_penalty_game* game) { delete game; }

apxeq_status apxeq_penalty_best_response(const apxeq_penalty_game* game,
                                         apxeq_player player, const double* against,
                                         double epsilon, int workers,
                                         double* out_strategy, double* out_value) {
  return guarded([&] {
    require(game && against && out_strategy && out_value, "null argument");
    const std::size_t n = game->game.size();
    const auto [reply, value] = apxeq::approx_best_response_penalty(
        game->game, to_player(player), strategy_from(against, n, "against"), epsilon,
        workers < 1 ? 1 : workers);
    *out_value = value;
    std::memcpy(out_strategy, reply.probs().data(), n * sizeof(double));
  });
}

apxeq_status apxeq_solve_qptas(const apxeq_penalty_game* game, double epsilon,
                               int64_t k_override, int workers, double budget,
                               apxeq_result** out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = wrap(apxeq::qptas(game->game, epsilon,
                             search_options(k_override, workers, budget)));
  });
}

apxeq_status apxeq_lipschitz_game_create(size_t players, const size_t* n_vertices,
                                         const size_t* dims, const double* const* vertices,
                                         const apxeq_utility_fn* utilities,
                                         void* const* user_data, double lambda, double p,
                                         double gamma, apxeq_lipschitz_game** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(players >= 1 && n_vertices && dims && vertices && utilities, "null input");
    std::vector<apxeq::ConvexStrategySpace> spaces;
    std::vector<apxeq::LipschitzUtility> fns;
    spaces.reserve(players);
    fns.reserve(players);
    for (std::size_t i = 0; i < players; ++i) {
      require(vertices[i] != nullptr && utilities[i] != nullptr, "null input");
      std::vector<std::vector<double>> verts(n_vertices[i],
                                             std::vector<double>(dims[i]));
      for (std::size_t v = 0; v < n_vertices[i]; ++v)
        for (std::size_t c = 0; c < dims[i]; ++c)
          verts[v][c] = vertices[i][v * dims[i] + c];
      spaces.emplace_back(std::move(verts));
      const apxeq_utility_fn fn = utilities[i];
      void* user = user_data ? user_data[i] : nullptr;
      fns.emplace_back([fn, user](std::span<const std::vector<double>> points) {
        std::vector<const double*> ptrs(points.size());
        std::vector<std::size_t> sizes(points.size());
        for (std::size_t j = 0; j < points.size(); ++j) {
          ptrs[j] = points[j].data();
          sizes[j] = points[j].size();
        }
        return fn(ptrs.data(), sizes.data(), points.size(), user);
      });
    }
    *out = new apxeq_lipschitz_game{
        apxeq::LipschitzGame(std::move(spaces), std::move(fns), lambda, p, gamma)};
  });
}

void apxeq_lipschitz_game_destroy(apxeq_lipschitz_game* game) { delete game; }

apxeq_status apxeq_evaluate_guarantee(const apxeq_lipschitz_game* game,
                                      const double* const* points, double delta,
                                      int workers, double* out) {
  return guarded([&] {
    require(game && points && out, "null argument");
    const std::size_t players = game->game.players();
    std::vector<std::vector<double>> profile(players);
    for (std::size_t i = 0; i < players; ++i) {
      require(points[i] != nullptr, "null profile point");
      const std::size_t dim = game->game.spaces[i].dimension();
      profile[i].assign(points[i], points[i] + dim);
    }
    *out = apxeq::evaluate_guarantee(game->game, profile, delta,
                                     workers < 1 ? 1 : workers);
  });
}

apxeq_status apxeq_solve_lipschitz(const apxeq_lipschitz_game* game, double epsilon,
                                   int64_t k_override, int workers, double budget,
                                   apxeq_result** out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = wrap(apxeq::find_equilibrium(game->game, epsilon,
                                        search_options(k_override, workers, budget)));
  });
}

apxeq_result_kind apxeq_result_get_kind(const apxeq_result* result) {
  return result ? result->kind : APXEQ_RESULT_APPROX;
}

size_t apxeq_result_players(const apxeq_result* result) {
  return result ? result->value.profile.size() : 0;
}

size_t apxeq_result_strategy_len(const apxeq_result* result, size_t player) {
  if (!result || player >= result->value.profile.size()) return 0;
  return result->value.profile[player].size();
}

apxeq_status apxeq_result_strategy(const apxeq_result* result, size_t player,
                                   double* out) {
  return guarded([&] {
    require(result && out, "null argument");
    require(player < result->value.profile.size(), "player index out of range");
    const auto& probs = result->value.profile[player].probs();
    std::memcpy(out, probs.data(), probs.size() * sizeof(double));
  });
}

apxeq_status apxeq_result_regrets(const apxeq_result* result, double* out) {
  return guarded([&] {
    require(result && out, "null argument");
    require(!result->value.regrets.empty(), "result carries no regrets");
    std::memcpy(out, result->value.regrets.data(),
                result->value.regrets.size() * sizeof(double));
  });
}

double apxeq_result_guarantee(const apxeq_result* result) {
  return result ? result->value.guarantee : 0.0;
}

const char* apxeq_result_method(const apxeq_result* result) {
  return result ? result->value.method.c_str() : "";
}

double apxeq_result_runtime_ms(const apxeq_result* result) {
  return result ? result->value.runtime_ms : 0.0;
}

int64_t apxeq_result_k_used(const apxeq_result* result) {
  return result ? result->verdict.k_used : 0;
}

uint64_t apxeq_result_profiles_checked(const apxeq_result* result) {
  return result ? result->verdict.profiles_checked : 0;
}

void apxeq_result_destroy(apxeq_result* result) { delete result; }

apxeq_status apxeq_k_for_lipschitz(double players, double lambda, double p, double gamma,
                                   double epsilon, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = apxeq::k_for_lipschitz(players, lambda, p, gamma, epsilon);
  });
}

apxeq_status apxeq_l_for_regret(double lambda, double p, double gamma, double delta,
                                int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = apxeq::l_for_regret(lambda, p, gamma, delta);
  });
}

apxeq_status apxeq_k_for_penalty(size_t n, double lambda, double p, double epsilon,
                                 int64_t cap, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = cap > 0 ? apxeq::k_for_penalty(n, lambda, p, epsilon, cap)
                   : apxeq::k_for_penalty(n, lambda, p, epsilon);
  });
}

apxeq_status apxeq_l_for_penalty_br(double lambda, double p, double epsilon,
                                    int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = apxeq::l_for_penalty_br(lambda, p, epsilon);
  });
}

uint64_t apxeq_splitmix64_next(uint64_t* state) {
  if (!state) return 0;
  return apxeq::SplitMix64::step(*state);
}

}  // extern "C"
