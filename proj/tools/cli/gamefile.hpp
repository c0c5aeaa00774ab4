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
// Text formats of the CLI: game documents, profile documents, and result
// documents, all JSON. Parsing reports the offending field path; numbers
// are emitted with 17 significant digits so documents round-trip exactly.

#ifndef APXEQ_CLI_GAMEFILE_HPP
#define APXEQ_CLI_GAMEFILE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apxeq_cli {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class GameType { Biased, Penalty, Lipschitz };

struct PenaltyDoc {
  std::string builtin;          // zero | l1 | l2sq | linf | inner
  std::vector<double> base;     // required for l1/l2sq/linf
  double weight = 0.0;          // d
  std::optional<double> lambda; // overrides the derived Lipschitz constant
  std::optional<double> p;      // overrides the norm exponent (default 2)
};

struct SpaceDoc {
  std::vector<std::vector<double>> vertices;
};

struct GameDoc {
  GameType type = GameType::Biased;
  std::size_t n = 0;
  std::vector<double> row_payoff;  // row-major n*n
  std::vector<double> col_payoff;

  // biased
  std::vector<double> base_row, base_col;
  std::string norm_row, norm_col;  // l1 | l2sq | linf | inner
  double d_row = 0.0, d_col = 0.0;

  // penalty
  PenaltyDoc penalty_row, penalty_col;

  // lipschitz
  std::vector<SpaceDoc> spaces;  // empty: both players on the n-simplex
  std::string utility;           // bilinear | bilinear_minus_inner
  double w_row = 1.0, w_col = 1.0;
  double lambda = 0.0, p = 2.0, gamma = 0.0;
};

struct ResultDoc {
  std::string kind;  // approx_result | equilibrium | no_exact_equilibrium
  std::string method;
  double guarantee = 0.0;
  std::vector<double> regrets;
  std::vector<std::vector<double>> profile;
  double runtime_ms = 0.0;
  std::int64_t k_used = 0;
  std::uint64_t profiles_checked = 0;
};

GameDoc parse_game(const std::string& text);
GameDoc load_game(const std::string& path);
std::string serialize_game(const GameDoc& doc);

std::vector<std::vector<double>> parse_profile(const std::string& text);
std::vector<std::vector<double>> load_profile(const std::string& path);
std::string serialize_profile(const std::vector<std::vector<double>>& profile);

ResultDoc parse_result(const std::string& text);
std::string serialize_result(const ResultDoc& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// %.17g — every double round-trips through this representation.
std::string format_g17(double value);
/// Shortest representation that round-trips (CSV cells).
std::string format_shortest(double value);

}  // namespace apxeq_cli

#endif  // APXEQ_CLI_GAMEFILE_HPP
