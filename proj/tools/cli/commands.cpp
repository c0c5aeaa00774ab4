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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>
#include <vector>

#include "apxeq.h"
#include "gamefile.hpp"

namespace apxeq_cli {

namespace {

[[noreturn]] void die(const std::string& message) { throw ParseError(message); }

void check_status(apxeq_status status, const std::string& what) {
  if (status != APXEQ_OK) die(what + ": " + apxeq_last_error());
}

apxeq_norm norm_of(const std::string& tag) {
  if (tag == "l1") return APXEQ_NORM_L1;
  if (tag == "l2sq") return APXEQ_NORM_L2SQ;
  if (tag == "linf") return APXEQ_NORM_LINF;
  if (tag == "inner") return APXEQ_NORM_INNER;
  die("unknown norm tag '" + tag + "'");
}

using BiasedHandle = std::unique_ptr<apxeq_biased_game, decltype(&apxeq_biased_game_destroy)>;
using PenaltyHandle =
    std::unique_ptr<apxeq_penalty_game, decltype(&apxeq_penalty_game_destroy)>;
using LipschitzHandle =
    std::unique_ptr<apxeq_lipschitz_game, decltype(&apxeq_lipschitz_game_destroy)>;
using ResultHandle = std::unique_ptr<apxeq_result, decltype(&apxeq_result_destroy)>;

BiasedHandle make_biased(const GameDoc& doc) {
  apxeq_biased_game* game = nullptr;
  check_status(apxeq_biased_game_create(doc.n, doc.row_payoff.data(), doc.col_payoff.data(),
                                        doc.base_row.data(), doc.base_col.data(),
                                        norm_of(doc.norm_row), norm_of(doc.norm_col),
                                        doc.d_row, doc.d_col, &game),
               "biased game");
  return BiasedHandle(game, apxeq_biased_game_destroy);
}

/// Built-in penalty evaluators used by penalty-game documents. The CLI owns
/// the context; the library sees a C function pointer.
struct PenaltyContext {
  std::string builtin;
  std::vector<double> base;
  double weight = 0.0;
};

extern "C" double cli_penalty_eval(const double* x, size_t n, void* user) {
  const auto* ctx = static_cast<const PenaltyContext*>(user);
  if (ctx->builtin == "zero") return 0.0;
  double acc = 0.0;
  if (ctx->builtin == "l1") {
    for (size_t i = 0; i < n; ++i) acc += std::abs(x[i] - ctx->base[i]);
  } else if (ctx->builtin == "l2sq") {
    for (size_t i = 0; i < n; ++i) {
      const double d = x[i] - ctx->base[i];
      acc += d * d;
    }
  } else if (ctx->builtin == "linf") {
    for (size_t i = 0; i < n; ++i) acc = std::max(acc, std::abs(x[i] - ctx->base[i]));
  } else {  // inner
    for (size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  }
  return ctx->weight * acc;
}

double derived_lambda(const PenaltyDoc& doc, std::size_t n) {
  if (doc.lambda) return *doc.lambda;
  if (doc.builtin == "zero" || doc.weight == 0.0) return 1e-6;
  if (doc.builtin == "l1") return doc.weight * std::sqrt(static_cast<double>(n));
  if (doc.builtin == "l2sq") return doc.weight * 2.0 * std::sqrt(2.0);
  if (doc.builtin == "linf") return doc.weight;
  return doc.weight * 2.0;  // inner
}

struct PenaltyInstance {
  PenaltyHandle handle{nullptr, apxeq_penalty_game_destroy};
  // Contexts must outlive the handle.
  std::unique_ptr<PenaltyContext> row_ctx, col_ctx;
};

PenaltyInstance make_penalty(const GameDoc& doc) {
  PenaltyInstance inst;
  inst.row_ctx = std::make_unique<PenaltyContext>(
      PenaltyContext{doc.penalty_row.builtin, doc.penalty_row.base, doc.penalty_row.weight});
  inst.col_ctx = std::make_unique<PenaltyContext>(
      PenaltyContext{doc.penalty_col.builtin, doc.penalty_col.base, doc.penalty_col.weight});
  apxeq_penalty_game* game = nullptr;
  check_status(
      apxeq_penalty_game_create(doc.n, doc.row_payoff.data(), doc.col_payoff.data(),
                                cli_penalty_eval, inst.row_ctx.get(),
                                derived_lambda(doc.penalty_row, doc.n),
                                doc.penalty_row.p.value_or(2.0), cli_penalty_eval,
                                inst.col_ctx.get(), derived_lambda(doc.penalty_col, doc.n),
                                doc.penalty_col.p.value_or(2.0), &game),
      "penalty game");
  inst.handle = PenaltyHandle(game, apxeq_penalty_game_destroy);
  return inst;
}

/// Built-in Lipschitz utilities: bilinear payoff through the document's
/// matrix, optionally minus a weighted inner product of the own point.
struct LipschitzContext {
  std::vector<double> matrix;  // row-major dim x dim
  std::size_t dim = 0;
  std::size_t own = 0;  // which profile point is "mine"
  double inner_weight = 0.0;
};

extern "C" double cli_lipschitz_eval(const double* const* points, const size_t* dims,
                                     size_t players, void* user) {
  (void)players;
  const auto* ctx = static_cast<const LipschitzContext*>(user);
  const double* x = points[0];
  const double* y = points[1];
  const std::size_t nx = dims[0];
  const std::size_t ny = dims[1];
  double acc = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < ny; ++j) row += ctx->matrix[i * ctx->dim + j] * y[j];
    acc += x[i] * row;
  }
  if (ctx->inner_weight != 0.0) {
    const double* own = points[ctx->own];
    double inner = 0.0;
    for (std::size_t i = 0; i < dims[ctx->own]; ++i) inner += own[i] * own[i];
    acc -= ctx->inner_weight * inner;
  }
  return acc;
}

struct LipschitzInstance {
  LipschitzHandle handle{nullptr, apxeq_lipschitz_game_destroy};
  std::unique_ptr<LipschitzContext> row_ctx, col_ctx;
};

LipschitzInstance make_lipschitz(const GameDoc& doc) {
  LipschitzInstance inst;
  const double w_row = doc.utility == "bilinear_minus_inner" ? doc.w_row : 0.0;
  const double w_col = doc.utility == "bilinear_minus_inner" ? doc.w_col : 0.0;
  inst.row_ctx = std::make_unique<LipschitzContext>(
      LipschitzContext{doc.row_payoff, doc.n, 0, w_row});
  inst.col_ctx = std::make_unique<LipschitzContext>(
      LipschitzContext{doc.col_payoff, doc.n, 1, w_col});

  std::vector<std::vector<double>> flat(2);
  std::vector<size_t> n_vertices(2), dims(2);
  for (std::size_t s = 0; s < 2; ++s) {
    if (doc.spaces.empty()) {
      n_vertices[s] = doc.n;
      dims[s] = doc.n;
      flat[s].assign(doc.n * doc.n, 0.0);
      for (std::size_t i = 0; i < doc.n; ++i) flat[s][i * doc.n + i] = 1.0;
    } else {
      const SpaceDoc& space = doc.spaces[s];
      n_vertices[s] = space.vertices.size();
      dims[s] = doc.n;
      for (const auto& v : space.vertices)
        flat[s].insert(flat[s].end(), v.begin(), v.end());
    }
  }
  const double* vertex_ptrs[2] = {flat[0].data(), flat[1].data()};
  const apxeq_utility_fn fns[2] = {cli_lipschitz_eval, cli_lipschitz_eval};
  void* users[2] = {inst.row_ctx.get(), inst.col_ctx.get()};
  apxeq_lipschitz_game* game = nullptr;
  check_status(apxeq_lipschitz_game_create(2, n_vertices.data(), dims.data(), vertex_ptrs,
                                           fns, users, doc.lambda, doc.p, doc.gamma, &game),
               "lipschitz game");
  inst.handle = LipschitzHandle(game, apxeq_lipschitz_game_destroy);
  return inst;
}

ResultDoc result_doc_of(const apxeq_result* result, bool timing) {
  ResultDoc doc;
  switch (apxeq_result_get_kind(result)) {
    case APXEQ_RESULT_APPROX: doc.kind = "approx_result"; break;
    case APXEQ_RESULT_EQUILIBRIUM: doc.kind = "equilibrium"; break;
    case APXEQ_RESULT_NO_EXACT_EQUILIBRIUM: doc.kind = "no_exact_equilibrium"; break;
  }
  doc.method = apxeq_result_method(result);
  if (doc.kind == "no_exact_equilibrium") {
    doc.k_used = apxeq_result_k_used(result);
    doc.profiles_checked = apxeq_result_profiles_checked(result);
    return doc;
  }
  doc.guarantee = apxeq_result_guarantee(result);
  const std::size_t players = apxeq_result_players(result);
  doc.regrets.resize(players);
  apxeq_result_regrets(result, doc.regrets.data());
  for (std::size_t p = 0; p < players; ++p) {
    std::vector<double> strategy(apxeq_result_strategy_len(result, p));
    apxeq_result_strategy(result, p, strategy.data());
    doc.profile.push_back(std::move(strategy));
  }
  doc.runtime_ms = timing ? apxeq_result_runtime_ms(result) : 0.0;
  return doc;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::vector<double> parse_strategy_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      die("cannot parse probability '" + item + "'");
    }
  }
  if (values.empty()) die("empty strategy list");
  return values;
}

double biased_utility(const GameDoc& doc, const std::vector<double>& x,
                      const std::vector<double>& y, bool row) {
  double payoff = 0.0;
  const std::vector<double>& m = row ? doc.row_payoff : doc.col_payoff;
  for (std::size_t i = 0; i < doc.n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < doc.n; ++j) acc += m[i * doc.n + j] * y[j];
    payoff += x[i] * acc;
  }
  return payoff;
}

double penalty_doc_utility(const GameDoc& doc, const std::vector<double>& x,
                           const std::vector<double>& y, bool row) {
  const double payoff = biased_utility(doc, x, y, row);
  const PenaltyDoc& side = row ? doc.penalty_row : doc.penalty_col;
  PenaltyContext ctx{side.builtin, side.base, side.weight};
  return payoff - cli_penalty_eval(row ? x.data() : y.data(), doc.n, &ctx);
}

}  // namespace

int cmd_solve(const SolveArgs& args) {
  const GameDoc doc = load_game(args.game_path);
  ResultHandle result(nullptr, apxeq_result_destroy);

  if (args.method == "base") {
    if (doc.type != GameType::Biased) die("--method base needs a biased game");
    const BiasedHandle game = make_biased(doc);
    apxeq_result* raw = nullptr;
    check_status(apxeq_solve_base(game.get(), &raw), "solve");
    result.reset(raw);
  } else if (args.method == "qptas") {
    if (!(args.epsilon > 0.0)) die("--method qptas needs --epsilon > 0");
    PenaltyInstance penalty;
    if (doc.type == GameType::Biased) {
      const BiasedHandle biased = make_biased(doc);
      apxeq_penalty_game* raw_game = nullptr;
      check_status(apxeq_penalty_game_from_biased(biased.get(), &raw_game), "wrap");
      penalty.handle = PenaltyHandle(raw_game, apxeq_penalty_game_destroy);
    } else if (doc.type == GameType::Penalty) {
      penalty = make_penalty(doc);
    } else {
      die("--method qptas needs a biased or penalty game");
    }
    apxeq_result* raw = nullptr;
    check_status(apxeq_solve_qptas(penalty.handle.get(), args.epsilon, args.k_override,
                                   args.workers, args.budget, &raw),
                 "solve");
    result.reset(raw);
  } else if (args.method == "lipschitz") {
    if (!(args.epsilon > 0.0)) die("--method lipschitz needs --epsilon > 0");
    if (doc.type != GameType::Lipschitz) die("--method lipschitz needs a lipschitz game");
    const LipschitzInstance game = make_lipschitz(doc);
    apxeq_result* raw = nullptr;
    check_status(apxeq_solve_lipschitz(game.handle.get(), args.epsilon, args.k_override,
                                       args.workers, args.budget, &raw),
                 "solve");
    result.reset(raw);
  } else {
    die("unknown method '" + args.method + "'");
  }

  const ResultDoc out = result_doc_of(result.get(), args.timing);
  emit(serialize_result(out), args.out_path);
  return out.kind == "no_exact_equilibrium" ? 2 : 0;
}

int cmd_best_response(const BestResponseArgs& args) {
  const GameDoc doc = load_game(args.game_path);
  if (args.player != "row" && args.player != "col") die("--player must be row or col");
  const apxeq_player player = args.player == "row" ? APXEQ_ROW : APXEQ_COL;
  const std::vector<double> against = parse_strategy_list(args.against);
  if (against.size() != doc.n) die("--against length does not match the game");

  std::vector<double> strategy(doc.n);
  double value = 0.0;
  if (doc.type == GameType::Biased) {
    const BiasedHandle game = make_biased(doc);
    if (args.oracle)
      check_status(apxeq_best_response_oracle(game.get(), player, against.data(),
                                              args.grid_l, strategy.data(), &value),
                   "best-response");
    else
      check_status(apxeq_best_response_biased(game.get(), player, against.data(),
                                              strategy.data(), &value),
                   "best-response");
  } else if (doc.type == GameType::Penalty) {
    const PenaltyInstance game = make_penalty(doc);
    check_status(apxeq_penalty_best_response(game.handle.get(), player, against.data(),
                                             args.epsilon, 1, strategy.data(), &value),
                 "best-response");
  } else {
    die("best-response supports biased and penalty games");
  }

  std::string out = "{\n  \"strategy\": [";
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (i) out += ", ";
    out += format_g17(strategy[i]);
  }
  out += "],\n  \"utility\": " + format_g17(value) + "\n}\n";
  std::cout << out;
  return 0;
}

int cmd_verify(const VerifyArgs& args) {
  const GameDoc doc = load_game(args.game_path);
  const std::vector<std::vector<double>> profile = load_profile(args.profile_path);
  if (profile.size() != 2) die("profile must contain two strategies");
  for (const auto& s : profile)
    if (s.size() != doc.n) die("profile strategy length does not match the game");

  double row_regret = 0.0, col_regret = 0.0;
  if (doc.type == GameType::Biased) {
    const BiasedHandle game = make_biased(doc);
    check_status(apxeq_measure_regrets(game.get(), profile[0].data(), profile[1].data(),
                                       &row_regret, &col_regret),
                 "verify");
  } else if (doc.type == GameType::Penalty) {
    if (!(args.epsilon > 0.0)) die("verify on penalty games needs --epsilon > 0");
    const PenaltyInstance game = make_penalty(doc);
    std::vector<double> reply(doc.n);
    double row_br = 0.0, col_br = 0.0;
    check_status(apxeq_penalty_best_response(game.handle.get(), APXEQ_ROW,
                                             profile[1].data(), args.epsilon, args.workers,
                                             reply.data(), &row_br),
                 "verify");
    check_status(apxeq_penalty_best_response(game.handle.get(), APXEQ_COL,
                                             profile[0].data(), args.epsilon, args.workers,
                                             reply.data(), &col_br),
                 "verify");
    row_regret = std::max(0.0, row_br - penalty_doc_utility(doc, profile[0], profile[1], true));
    col_regret = std::max(0.0, col_br - penalty_doc_utility(doc, profile[0], profile[1], false));
  } else {
    if (!(args.epsilon > 0.0)) die("verify on lipschitz games needs --epsilon > 0");
    const LipschitzInstance game = make_lipschitz(doc);
    const double* points[2] = {profile[0].data(), profile[1].data()};
    double alpha = 0.0;
    check_status(apxeq_evaluate_guarantee(game.handle.get(), points, args.epsilon,
                                          args.workers, &alpha),
                 "verify");
    // alpha = epsilon + max approximate regret.
    row_regret = col_regret = std::max(0.0, alpha - args.epsilon);
  }

  const bool holds =
      row_regret <= args.epsilon + 1e-9 && col_regret <= args.epsilon + 1e-9;
  std::string out = "{\n  \"holds\": ";
  out += holds ? "true" : "false";
  out += ",\n  \"regrets\": [" + format_g17(row_regret) + ", " + format_g17(col_regret) +
         "],\n  \"epsilon\": " + format_g17(args.epsilon) + "\n}\n";
  std::cout << out;
  return holds ? 0 : 1;
}

int cmd_gen(const GenArgs& args) {
  apxeq_biased_game* raw = nullptr;
  const apxeq_norm norm = norm_of(args.norm);
  check_status(apxeq_generate_random_game(args.n, norm, norm, args.d_row, args.d_col,
                                          args.seed, &raw),
               "gen");
  const BiasedHandle game(raw, apxeq_biased_game_destroy);

  GameDoc doc;
  doc.type = GameType::Biased;
  doc.n = args.n;
  doc.row_payoff.resize(args.n * args.n);
  doc.col_payoff.resize(args.n * args.n);
  doc.base_row.resize(args.n);
  doc.base_col.resize(args.n);
  check_status(apxeq_biased_game_payoffs(game.get(), doc.row_payoff.data(),
                                         doc.col_payoff.data()),
               "gen");
  check_status(apxeq_biased_game_bases(game.get(), doc.base_row.data(), doc.base_col.data()),
               "gen");
  doc.norm_row = doc.norm_col = args.norm;
  doc.d_row = args.d_row;
  doc.d_col = args.d_col;
  emit(serialize_game(doc), args.out_path);
  return 0;
}

int cmd_bench(const BenchArgs& args) {
  const apxeq_norm norm = norm_of(args.norm);
  std::vector<std::string> rows(args.trials);
  std::vector<double> row_regrets(args.trials), col_regrets(args.trials),
      guarantees(args.trials);

  const auto run_trial = [&](std::size_t trial) {
    const std::uint64_t game_seed = args.seed + trial;
    double d_row = args.d_row;
    double d_col = args.d_col;
    if (d_row < 0.0 || d_col < 0.0) {
      // Per-trial weights come from their own documented stream so explicit
      // weights never shift the payoff draws.
      std::uint64_t state = game_seed + 0x9E3779B97F4A7C15ULL;
      const auto draw_unit = [&state] {
        return (static_cast<double>(apxeq_splitmix64_next(&state) >> 11) + 0.5) *
               0x1.0p-53;
      };
      double lo = 0.0, hi = 1.0;
      if (norm == APXEQ_NORM_L1) hi = 0.5;  // below the dominance threshold
      const double dr = lo + draw_unit() * (hi - lo);
      const double dc = lo + draw_unit() * (hi - lo);
      if (d_row < 0.0) d_row = norm == APXEQ_NORM_L2SQ ? 1.0 : dr;
      if (d_col < 0.0) d_col = norm == APXEQ_NORM_L2SQ ? 1.0 : dc;
    }
    apxeq_biased_game* raw = nullptr;
    check_status(
        apxeq_generate_random_game(args.n, norm, norm, d_row, d_col, game_seed, &raw),
        "bench");
    const BiasedHandle game(raw, apxeq_biased_game_destroy);
    double delta = 0.0;
    check_status(apxeq_choose_delta(game.get(), &delta), "bench");
    apxeq_result* raw_result = nullptr;
    check_status(apxeq_solve_base(game.get(), &raw_result), "bench");
    const ResultHandle result(raw_result, apxeq_result_destroy);
    double regrets[2] = {0.0, 0.0};
    check_status(apxeq_result_regrets(result.get(), regrets), "bench");
    const double guarantee = apxeq_result_guarantee(result.get());
    row_regrets[trial] = regrets[0];
    col_regrets[trial] = regrets[1];
    guarantees[trial] = guarantee;

    std::string line;
    line += std::to_string(game_seed) + "," + std::to_string(args.n) + "," + args.norm +
            "," + args.norm + "," + format_shortest(d_row) + "," + format_shortest(d_col) +
            "," + format_shortest(delta) + "," + format_shortest(regrets[0]) + "," +
            format_shortest(regrets[1]) + "," + format_shortest(guarantee) + "," +
            format_shortest(delta) + "," +
            format_shortest(args.timing ? apxeq_result_runtime_ms(result.get()) : 0.0);
    rows[trial] = std::move(line);
  };

  const int workers = std::max(args.workers, 1);
  if (workers == 1 || args.trials < 2) {
    for (std::size_t t = 0; t < args.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = static_cast<std::size_t>(w); t < args.trials;
               t += static_cast<std::size_t>(workers))
            run_trial(t);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::string csv =
      "seed,n,norm_row,norm_col,d_row,d_col,delta,row_regret,col_regret,guarantee,"
      "analytic_bound,runtime_ms\n";
  double max_row = 0.0, max_col = 0.0, max_guar = 0.0;
  double mean_row = 0.0, mean_col = 0.0;
  for (std::size_t t = 0; t < args.trials; ++t) {
    csv += rows[t] + "\n";
    max_row = std::max(max_row, row_regrets[t]);
    max_col = std::max(max_col, col_regrets[t]);
    max_guar = std::max(max_guar, guarantees[t]);
    mean_row += row_regrets[t];
    mean_col += col_regrets[t];
  }
  if (args.trials > 0) {
    mean_row /= static_cast<double>(args.trials);
    mean_col /= static_cast<double>(args.trials);
  }
  csv += "summary,max_row_regret=" + format_shortest(max_row) +
         ",max_col_regret=" + format_shortest(max_col) +
         ",mean_row_regret=" + format_shortest(mean_row) +
         ",mean_col_regret=" + format_shortest(mean_col) +
         ",max_guarantee=" + format_shortest(max_guar) + "\n";
  if (args.csv_path.empty())
    std::cout << csv;
  else
    write_file(args.csv_path, csv);
  return 0;
}

}  // namespace apxeq_cli
