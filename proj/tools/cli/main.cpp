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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gamefile.hpp"

int main(int argc, char** argv) {
  CLI::App app{"apxeq - approximate equilibria for Lipschitz, penalty, and "
               "distance-biased games"};
  app.require_subcommand(1);

  apxeq_cli::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve a game file");
  solve->add_option("--game", solve_args.game_path, "game document")->required();
  solve->add_option("--method", solve_args.method, "base | qptas | lipschitz")->required();
  solve->add_option("--epsilon", solve_args.epsilon, "target accuracy (qptas/lipschitz)");
  solve->add_option("--k", solve_args.k_override, "override the k-uniform grid size");
  solve->add_option("--workers", solve_args.workers, "worker threads");
  solve->add_option("--budget", solve_args.budget, "search budget in utility evaluations");
  solve->add_option("--out", solve_args.out_path, "result document path (default stdout)");
  solve->add_flag("--timing", solve_args.timing, "emit measured runtime_ms");

  apxeq_cli::BestResponseArgs br_args;
  CLI::App* br = app.add_subcommand("best-response", "Best response against a strategy");
  br->add_option("--game", br_args.game_path, "game document")->required();
  br->add_option("--player", br_args.player, "row | col")->required();
  br->add_option("--against", br_args.against, "opponent strategy, e.g. \"0.5,0.5\"")
      ->required();
  br->add_flag("--oracle", br_args.oracle, "use the brute-force reference oracle");
  br->add_option("--grid-l", br_args.grid_l, "grid size for the oracle (default 300)");
  br->add_option("--epsilon", br_args.epsilon, "accuracy for penalty games (default 0.1)");

  apxeq_cli::VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check a profile against epsilon");
  verify->add_option("--game", verify_args.game_path, "game document")->required();
  verify->add_option("--profile", verify_args.profile_path, "profile document")->required();
  verify->add_option("--epsilon", verify_args.epsilon, "tolerance")->required();
  verify->add_option("--workers", verify_args.workers, "worker threads");

  apxeq_cli::GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random biased game");
  gen->add_option("--n", gen_args.n, "strategies per player")->required();
  gen->add_option("--norm", gen_args.norm, "l1 | l2sq | linf | inner")->required();
  gen->add_option("--d-row", gen_args.d_row, "row penalty weight")->required();
  gen->add_option("--d-col", gen_args.d_col, "column penalty weight")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed")->required();
  gen->add_option("--out", gen_args.out_path, "game document path (default stdout)");

  apxeq_cli::BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark the base algorithm");
  bench->add_option("--norm", bench_args.norm, "l1 | l2sq | linf | inner")->required();
  bench->add_option("--n", bench_args.n, "strategies per player")->required();
  bench->add_option("--trials", bench_args.trials, "number of seeded games")->required();
  bench->add_option("--seed", bench_args.seed, "base seed")->required();
  bench->add_option("--csv", bench_args.csv_path, "CSV output path (default stdout)");
  bench->add_option("--d-row", bench_args.d_row,
                    "row penalty weight (negative: draw per trial)");
  bench->add_option("--d-col", bench_args.d_col,
                    "column penalty weight (negative: draw per trial)");
  bench->add_option("--workers", bench_args.workers, "worker threads");
  bench->add_flag("--timing", bench_args.timing, "emit measured runtime_ms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return apxeq_cli::cmd_solve(solve_args);
    if (br->parsed()) return apxeq_cli::cmd_best_response(br_args);
    if (verify->parsed()) return apxeq_cli::cmd_verify(verify_args);
    if (gen->parsed()) return apxeq_cli::cmd_gen(gen_args);
    if (bench->parsed()) return apxeq_cli::cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
