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
// Document-format tests plus black-box runs of the installed CLI binary
// (path injected by the build).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gamefile.hpp"

using namespace apxeq_cli;

namespace {

const char* kMinimalBiased = R"({
  "type": "biased",
  "n": 2,
  "R": [1, 0, 0, 0],
  "C": [1, 0, 0, 0],
  "base_row": [0.5, 0.5],
  "base_col": [0.5, 0.5],
  "norm_row": "l1",
  "norm_col": "l1",
  "d_row": 0.25,
  "d_col": 0.25
})";

std::string temp_path(const std::string& name) {
  return std::string("/tmp/apxeq_cli_test_") + name;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string out_file = temp_path("stdout.txt");
  const std::string command = std::string(APXEQ_CLI_PATH) + " " + args + " > " + out_file +
                              " 2>" + temp_path("stderr.txt");
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(out_file);
  return result;
}

}  // namespace

TEST_CASE("minimal biased document parses") {
  const GameDoc doc = parse_game(kMinimalBiased);
  CHECK(doc.type == GameType::Biased);
  CHECK(doc.n == 2);
  CHECK(doc.row_payoff[0] == 1.0);
  CHECK(doc.norm_col == "l1");
}

TEST_CASE("out-of-range payoffs name the offending cell") {
  std::string bad = kMinimalBiased;
  bad.replace(bad.find("[1, 0, 0, 0]"), 12, "[1, 1.5, 0, 0]");
  try {
    parse_game(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("R[1]") != std::string::npos);
    CHECK(std::string(e.what()).find("1.5") != std::string::npos);
  }
}

TEST_CASE("missing fields name their path") {
  try {
    parse_game(R"({"type": "biased", "n": 2})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(".R") != std::string::npos);
  }
}

TEST_CASE("game documents round-trip") {
  const GameDoc doc = parse_game(kMinimalBiased);
  const std::string text = serialize_game(doc);
  const GameDoc again = parse_game(text);
  CHECK(serialize_game(again) == text);
  CHECK(again.d_row == doc.d_row);
  CHECK(again.base_row == doc.base_row);
}

TEST_CASE("result documents round-trip bit-exactly") {
  ResultDoc doc;
  doc.kind = "approx_result";
  doc.method = "base/l1-l1";
  doc.guarantee = 1.0 / 3.0;
  doc.regrets = {0.0, 1e-17};
  doc.profile = {{0.1, 0.9}, {0.3333333333333333, 0.6666666666666667}};
  const std::string text = serialize_result(doc);
  const ResultDoc again = parse_result(text);
  CHECK(serialize_result(again) == text);
  CHECK(again.guarantee == doc.guarantee);
  CHECK(again.profile[1][0] == doc.profile[1][0]);
}

TEST_CASE("profile documents round-trip") {
  const std::string text = serialize_profile({{0.25, 0.75}, {1.0, 0.0}});
  const auto profile = parse_profile(text);
  REQUIRE(profile.size() == 2);
  CHECK(profile[0][1] == 0.75);
}

TEST_CASE("cli: gen then solve then verify") {
  const std::string game = temp_path("game.json");
  const std::string result = temp_path("result.json");
  CHECK(run_cli("gen --n 3 --norm l1 --d-row 0.3 --d-col 0.3 --seed 5 --out " + game)
            .exit_code == 0);
  CHECK(run_cli("solve --game " + game + " --method base --out " + result).exit_code == 0);

  const ResultDoc doc = parse_result(read_file(result));
  CHECK(doc.kind == "approx_result");
  CHECK(doc.guarantee <= 2.0 / 3.0 + 1e-9);
  CHECK(doc.runtime_ms == 0.0);  // deterministic by default

  const std::string profile = temp_path("profile.json");
  write_file(profile, serialize_profile(doc.profile));
  CHECK(run_cli("verify --game " + game + " --profile " + profile + " --epsilon 0.6667")
            .exit_code == 0);
  // Regret-free verification at a tiny epsilon must fail unless the profile
  // happens to be exact; at epsilon = 0 the exit code reports the failure.
  const CommandResult strict =
      run_cli("verify --game " + game + " --profile " + profile + " --epsilon 0");
  CHECK((strict.exit_code == 0 || strict.exit_code == 1));
}

TEST_CASE("cli: verify agrees with solve's self-reported regrets") {
  const std::string game = temp_path("game2.json");
  const std::string result = temp_path("result2.json");
  REQUIRE(run_cli("gen --n 4 --norm l2sq --d-row 1 --d-col 1 --seed 17 --out " + game)
              .exit_code == 0);
  REQUIRE(run_cli("solve --game " + game + " --method base --out " + result).exit_code == 0);
  const ResultDoc doc = parse_result(read_file(result));

  const std::string profile = temp_path("profile2.json");
  write_file(profile, serialize_profile(doc.profile));
  const CommandResult verify =
      run_cli("verify --game " + game + " --profile " + profile + " --epsilon 1.0");
  CHECK(verify.exit_code == 0);
  // Extract the regrets array from the verify output and compare.
  const auto pos = verify.output.find("\"regrets\": [");
  REQUIRE(pos != std::string::npos);
  double r0 = 0.0, r1 = 0.0;
  REQUIRE(std::sscanf(verify.output.c_str() + pos, "\"regrets\": [%lf, %lf]", &r0, &r1) == 2);
  CHECK(std::abs(r0 - doc.regrets[0]) <= 1e-9);
  CHECK(std::abs(r1 - doc.regrets[1]) <= 1e-9);
}

TEST_CASE("cli: rerun of bench is byte-identical and workers do not matter") {
  const std::string a = temp_path("bench_a.csv");
  const std::string b = temp_path("bench_b.csv");
  const std::string c = temp_path("bench_c.csv");
  REQUIRE(run_cli("bench --norm l1 --n 5 --trials 40 --seed 100 --csv " + a).exit_code == 0);
  REQUIRE(run_cli("bench --norm l1 --n 5 --trials 40 --seed 100 --csv " + b).exit_code == 0);
  REQUIRE(run_cli("bench --norm l1 --n 5 --trials 40 --seed 100 --workers 4 --csv " + c)
              .exit_code == 0);
  const std::string text_a = read_file(a);
  CHECK(text_a == read_file(b));
  CHECK(text_a == read_file(c));
  CHECK(text_a.rfind("seed,n,norm_row,norm_col,d_row,d_col,delta,row_regret,col_regret,"
                     "guarantee,analytic_bound,runtime_ms\n",
                     0) == 0);

  // Every guarantee stays below the L1 bound.
  std::istringstream lines(text_a);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary", 0) == 0) break;
    // guarantee is the 10th column
    std::size_t start = 0;
    for (int col = 0; col < 9; ++col) start = line.find(',', start) + 1;
    const double guarantee = std::stod(line.substr(start));
    CHECK(guarantee <= 2.0 / 3.0 + 1e-9);
    ++rows;
  }
  CHECK(rows == 40);
}

TEST_CASE("cli: no-exact-equilibrium verdict exits with code 2") {
  const std::string game = temp_path("pennies.json");
  write_file(game, R"({
  "type": "penalty",
  "n": 2,
  "R": [1, 0, 0, 1],
  "C": [0, 1, 1, 0],
  "penalty_row": {"builtin": "zero"},
  "penalty_col": {"builtin": "zero"}
})");
  const CommandResult result =
      run_cli("solve --game " + game + " --method qptas --epsilon 0.1 --k 1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("no_exact_equilibrium") != std::string::npos);
}

TEST_CASE("cli: malformed games exit with code 1") {
  const std::string game = temp_path("bad.json");
  write_file(game, R"({"type": "biased", "n": 2, "R": [2, 0, 0, 0]})");
  CHECK(run_cli("solve --game " + game + " --method base").exit_code == 1);
}

TEST_CASE("cli: lipschitz games accept explicit vertex spaces") {
  const std::string game = temp_path("lip_spaces.json");
  write_file(game, R"({
  "type": "lipschitz",
  "n": 2,
  "R": [1, 0, 0, 0],
  "C": [1, 0, 0, 0],
  "utility": "bilinear",
  "lambda": 2.0,
  "p": 2.0,
  "gamma": 1.0,
  "spaces": [
    {"vertices": [[1, 0], [0, 1]]},
    {"vertices": [[1, 0], [0, 1]]}
  ]
})");
  const std::string out = temp_path("lip_spaces_out.json");
  REQUIRE(run_cli("solve --game " + game +
                  " --method lipschitz --epsilon 0.3 --k 2 --out " + out)
              .exit_code == 0);
  const ResultDoc doc = parse_result(read_file(out));
  CHECK(doc.kind == "equilibrium");
  CHECK(doc.guarantee <= 0.9 + 1e-9);
}

TEST_CASE("cli: qptas and verify on a built-in penalty document") {
  const std::string game = temp_path("pen_l2.json");
  write_file(game, R"({
  "type": "penalty",
  "n": 2,
  "R": [1, 0, 0, 0.5],
  "C": [1, 0, 0, 0.5],
  "penalty_row": {"builtin": "l2sq", "base": [0.5, 0.5], "weight": 1.0},
  "penalty_col": {"builtin": "l2sq", "base": [0.5, 0.5], "weight": 1.0}
})");
  const std::string out = temp_path("pen_l2_out.json");
  REQUIRE(run_cli("solve --game " + game + " --method qptas --epsilon 0.4 --k 8 --out " +
                  out)
              .exit_code == 0);
  const ResultDoc doc = parse_result(read_file(out));
  CHECK(doc.kind == "equilibrium");
  CHECK(doc.guarantee < 0.8);

  const std::string profile = temp_path("pen_l2_profile.json");
  write_file(profile, serialize_profile(doc.profile));
  CHECK(run_cli("verify --game " + game + " --profile " + profile + " --epsilon 0.4")
            .exit_code == 0);
}

TEST_CASE("cli: verify accepts lipschitz results") {
  const std::string game = temp_path("lip_verify.json");
  write_file(game, R"({
  "type": "lipschitz",
  "n": 2,
  "R": [1, 0, 0, 0],
  "C": [1, 0, 0, 0],
  "utility": "bilinear",
  "lambda": 2.0,
  "p": 2.0,
  "gamma": 1.0
})");
  const std::string out = temp_path("lip_verify_out.json");
  REQUIRE(run_cli("solve --game " + game + " --method lipschitz --epsilon 0.3 --k 2 --out " +
                  out)
              .exit_code == 0);
  const ResultDoc doc = parse_result(read_file(out));
  const std::string profile = temp_path("lip_verify_profile.json");
  write_file(profile, serialize_profile(doc.profile));
  CHECK(run_cli("verify --game " + game + " --profile " + profile + " --epsilon 0.3")
            .exit_code == 0);
}

TEST_CASE("cli: lipschitz solve is worker-independent") {
  const std::string game = temp_path("lip.json");
  write_file(game, R"({
  "type": "lipschitz",
  "n": 2,
  "R": [1, 0, 0, 0.5],
  "C": [1, 0, 0, 0.5],
  "utility": "bilinear",
  "lambda": 2.0,
  "p": 2.0,
  "gamma": 1.0
})");
  const std::string out1 = temp_path("lip1.json");
  const std::string out4 = temp_path("lip4.json");
  REQUIRE(run_cli("solve --game " + game +
                  " --method lipschitz --epsilon 0.3 --k 2 --workers 1 --out " + out1)
              .exit_code == 0);
  REQUIRE(run_cli("solve --game " + game +
                  " --method lipschitz --epsilon 0.3 --k 2 --workers 4 --out " + out4)
              .exit_code == 0);
  CHECK(read_file(out1) == read_file(out4));
}
