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

#ifndef APXEQ_CLI_COMMANDS_HPP
#define APXEQ_CLI_COMMANDS_HPP

#include <cstdint>
#include <string>

namespace apxeq_cli {

// Exit codes: 0 success / equilibrium found, 2 no-exact-equilibrium
// verdict, 1 error (and for verify: 1 when the profile fails the check).

struct SolveArgs {
  std::string game_path;
  std::string method;  // base | qptas | lipschitz
  double epsilon = 0.0;
  std::int64_t k_override = 0;  // 0: formula value
  int workers = 1;
  double budget = 0.0;  // <= 0: library default
  std::string out_path; // empty: stdout
  bool timing = false;
};
int cmd_solve(const SolveArgs& args);

struct BestResponseArgs {
  std::string game_path;
  std::string player;   // row | col
  std::string against;  // comma-separated probabilities
  bool oracle = false;
  std::int64_t grid_l = 300;
  double epsilon = 0.1;  // penalty games only
};
int cmd_best_response(const BestResponseArgs& args);

struct VerifyArgs {
  std::string game_path;
  std::string profile_path;
  double epsilon = 0.0;
  int workers = 1;
};
int cmd_verify(const VerifyArgs& args);

struct GenArgs {
  std::size_t n = 0;
  std::string norm;
  double d_row = 0.0;
  double d_col = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
};
int cmd_gen(const GenArgs& args);

struct BenchArgs {
  std::string norm;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string csv_path;
  double d_row = -1.0;  // negative: draw per trial from the norm's range
  double d_col = -1.0;
  int workers = 1;
  bool timing = false;
};
int cmd_bench(const BenchArgs& args);

}  // namespace apxeq_cli

#endif  // APXEQ_CLI_COMMANDS_HPP
