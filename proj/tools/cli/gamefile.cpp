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

#include "gamefile.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace apxeq_cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ParseError(path + ": " + reason);
}

const json& field(const json& j, const std::string& path, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) fail(path + "." + name, "missing field");
  return *it;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> vector_at(const json& j, const std::string& path,
                              std::size_t expect) {
  if (!j.is_array()) fail(path, "expected an array");
  if (expect != 0 && j.size() != expect)
    fail(path, "expected " + std::to_string(expect) + " entries, got " +
                   std::to_string(j.size()));
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> payoff_matrix(const json& j, const std::string& path,
                                  std::size_t n) {
  const std::vector<double> values = vector_at(j, path, n * n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0))
      fail(path + "[" + std::to_string(i) + "]",
           "payoff " + format_g17(values[i]) + " outside [0,1]");
  }
  return values;
}

std::vector<double> simplex_vector(const json& j, const std::string& path,
                                   std::size_t n) {
  const std::vector<double> values = vector_at(j, path, n);
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0)
      fail(path + "[" + std::to_string(i) + "]", "negative probability");
    sum += values[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) fail(path, "probabilities must sum to 1");
  return values;
}

void check_norm(const std::string& norm, const std::string& path) {
  if (norm != "l1" && norm != "l2sq" && norm != "linf" && norm != "inner")
    fail(path, "unknown norm tag '" + norm + "'");
}

PenaltyDoc parse_penalty(const json& j, const std::string& path, std::size_t n) {
  PenaltyDoc doc;
  doc.builtin = string_at(field(j, path, "builtin"), path + ".builtin");
  if (doc.builtin != "zero" && doc.builtin != "l1" && doc.builtin != "l2sq" &&
      doc.builtin != "linf" && doc.builtin != "inner")
    fail(path + ".builtin", "unknown builtin penalty '" + doc.builtin + "'");
  if (doc.builtin == "l1" || doc.builtin == "l2sq" || doc.builtin == "linf")
    doc.base = simplex_vector(field(j, path, "base"), path + ".base", n);
  if (doc.builtin != "zero") {
    doc.weight = number_at(field(j, path, "weight"), path + ".weight");
    if (doc.weight < 0.0) fail(path + ".weight", "weight must be nonnegative");
  }
  if (j.contains("lambda")) {
    doc.lambda = number_at(j["lambda"], path + ".lambda");
    if (!(*doc.lambda > 0.0)) fail(path + ".lambda", "lambda must be positive");
  }
  if (j.contains("p")) {
    doc.p = number_at(j["p"], path + ".p");
    if (!(*doc.p >= 2.0)) fail(path + ".p", "p must be >= 2");
  }
  return doc;
}

json to_json(const std::vector<double>& values) { return json(values); }

/// Indented JSON with %.17g numbers; key order follows insertion order.
void dump(const nlohmann::ordered_json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + "  \"" + key + "\": ";
        dump(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      break;
    }
    case json::value_t::array: {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump(j[i], out, indent);
      }
      out += "]";
      break;
    }
    case json::value_t::string:
      out += nlohmann::ordered_json(j.get<std::string>()).dump();
      break;
    case json::value_t::number_float:
      out += format_g17(j.get<double>());
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    default:
      out += "null";
      break;
  }
}

std::string dump_document(const nlohmann::ordered_json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("document: not valid JSON");
  return j;
}

}  // namespace

std::string format_g17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string format_shortest(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

GameDoc parse_game(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail("document", "expected an object");
  GameDoc doc;
  const std::string type = string_at(field(j, "document", "type"), "type");
  const double n_raw = number_at(field(j, "document", "n"), "n");
  if (n_raw < 1 || n_raw != std::floor(n_raw)) fail("n", "expected a positive integer");
  doc.n = static_cast<std::size_t>(n_raw);
  doc.row_payoff = payoff_matrix(field(j, "document", "R"), "R", doc.n);
  doc.col_payoff = payoff_matrix(field(j, "document", "C"), "C", doc.n);

  if (type == "biased") {
    doc.type = GameType::Biased;
    doc.base_row = simplex_vector(field(j, "document", "base_row"), "base_row", doc.n);
    doc.base_col = simplex_vector(field(j, "document", "base_col"), "base_col", doc.n);
    doc.norm_row = string_at(field(j, "document", "norm_row"), "norm_row");
    doc.norm_col = string_at(field(j, "document", "norm_col"), "norm_col");
    check_norm(doc.norm_row, "norm_row");
    check_norm(doc.norm_col, "norm_col");
    doc.d_row = number_at(field(j, "document", "d_row"), "d_row");
    doc.d_col = number_at(field(j, "document", "d_col"), "d_col");
    if (doc.d_row < 0.0) fail("d_row", "must be nonnegative");
    if (doc.d_col < 0.0) fail("d_col", "must be nonnegative");
  } else if (type == "penalty") {
    doc.type = GameType::Penalty;
    doc.penalty_row = parse_penalty(field(j, "document", "penalty_row"), "penalty_row", doc.n);
    doc.penalty_col = parse_penalty(field(j, "document", "penalty_col"), "penalty_col", doc.n);
  } else if (type == "lipschitz") {
    doc.type = GameType::Lipschitz;
    doc.utility = string_at(field(j, "document", "utility"), "utility");
    if (doc.utility != "bilinear" && doc.utility != "bilinear_minus_inner")
      fail("utility", "unknown builtin utility '" + doc.utility + "'");
    doc.lambda = number_at(field(j, "document", "lambda"), "lambda");
    doc.p = number_at(field(j, "document", "p"), "p");
    doc.gamma = number_at(field(j, "document", "gamma"), "gamma");
    if (!(doc.lambda > 0.0)) fail("lambda", "must be positive");
    if (!(doc.p >= 2.0)) fail("p", "must be >= 2");
    if (!(doc.gamma > 0.0)) fail("gamma", "must be positive");
    if (j.contains("w_row")) doc.w_row = number_at(j["w_row"], "w_row");
    if (j.contains("w_col")) doc.w_col = number_at(j["w_col"], "w_col");
    if (j.contains("spaces")) {
      const json& spaces = j["spaces"];
      if (!spaces.is_array() || spaces.size() != 2)
        fail("spaces", "expected an array of 2 player spaces");
      for (std::size_t s = 0; s < spaces.size(); ++s) {
        const std::string path = "spaces[" + std::to_string(s) + "]";
        SpaceDoc space;
        const json& verts = field(spaces[s], path, "vertices");
        if (!verts.is_array() || verts.empty()) fail(path + ".vertices", "expected vertices");
        for (std::size_t v = 0; v < verts.size(); ++v)
          space.vertices.push_back(
              vector_at(verts[v], path + ".vertices[" + std::to_string(v) + "]", doc.n));
        doc.spaces.push_back(std::move(space));
      }
    }
  } else {
    fail("type", "unknown game type '" + type + "'");
  }
  return doc;
}

GameDoc load_game(const std::string& path) { return parse_game(read_file(path)); }

std::string serialize_game(const GameDoc& doc) {
  nlohmann::ordered_json j;
  switch (doc.type) {
    case GameType::Biased: j["type"] = "biased"; break;
    case GameType::Penalty: j["type"] = "penalty"; break;
    case GameType::Lipschitz: j["type"] = "lipschitz"; break;
  }
  j["n"] = doc.n;
  j["R"] = to_json(doc.row_payoff);
  j["C"] = to_json(doc.col_payoff);
  if (doc.type == GameType::Biased) {
    j["base_row"] = to_json(doc.base_row);
    j["base_col"] = to_json(doc.base_col);
    j["norm_row"] = doc.norm_row;
    j["norm_col"] = doc.norm_col;
    j["d_row"] = doc.d_row;
    j["d_col"] = doc.d_col;
  } else if (doc.type == GameType::Penalty) {
    for (const auto* side : {&doc.penalty_row, &doc.penalty_col}) {
      nlohmann::ordered_json pj;
      pj["builtin"] = side->builtin;
      if (!side->base.empty()) pj["base"] = to_json(side->base);
      if (side->builtin != "zero") pj["weight"] = side->weight;
      if (side->lambda) pj["lambda"] = *side->lambda;
      if (side->p) pj["p"] = *side->p;
      j[side == &doc.penalty_row ? "penalty_row" : "penalty_col"] = pj;
    }
  } else {
    j["utility"] = doc.utility;
    j["lambda"] = doc.lambda;
    j["p"] = doc.p;
    j["gamma"] = doc.gamma;
    if (doc.utility == "bilinear_minus_inner") {
      j["w_row"] = doc.w_row;
      j["w_col"] = doc.w_col;
    }
    if (!doc.spaces.empty()) {
      nlohmann::ordered_json spaces = nlohmann::ordered_json::array();
      for (const SpaceDoc& space : doc.spaces) {
        nlohmann::ordered_json sj;
        sj["vertices"] = space.vertices;
        spaces.push_back(sj);
      }
      j["spaces"] = spaces;
    }
  }
  return dump_document(j);
}

std::vector<std::vector<double>> parse_profile(const std::string& text) {
  const json j = parse_json(text);
  const json& arr = field(j, "document", "profile");
  if (!arr.is_array() || arr.empty()) fail("profile", "expected a nonempty array");
  std::vector<std::vector<double>> profile;
  for (std::size_t i = 0; i < arr.size(); ++i)
    profile.push_back(
        simplex_vector(arr[i], "profile[" + std::to_string(i) + "]", arr[i].size()));
  return profile;
}

std::vector<std::vector<double>> load_profile(const std::string& path) {
  return parse_profile(read_file(path));
}

std::string serialize_profile(const std::vector<std::vector<double>>& profile) {
  nlohmann::ordered_json j;
  j["profile"] = profile;
  return dump_document(j);
}

ResultDoc parse_result(const std::string& text) {
  const json j = parse_json(text);
  ResultDoc doc;
  doc.kind = string_at(field(j, "document", "kind"), "kind");
  doc.method = string_at(field(j, "document", "method"), "method");
  if (doc.kind == "no_exact_equilibrium") {
    doc.k_used = static_cast<std::int64_t>(number_at(field(j, "document", "k_used"), "k_used"));
    doc.profiles_checked = static_cast<std::uint64_t>(
        number_at(field(j, "document", "profiles_checked"), "profiles_checked"));
    return doc;
  }
  doc.guarantee = number_at(field(j, "document", "guarantee"), "guarantee");
  doc.regrets = vector_at(field(j, "document", "regrets"), "regrets", 0);
  const json& arr = field(j, "document", "profile");
  if (!arr.is_array()) fail("profile", "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i)
    doc.profile.push_back(vector_at(arr[i], "profile[" + std::to_string(i) + "]", 0));
  doc.runtime_ms = number_at(field(j, "document", "runtime_ms"), "runtime_ms");
  return doc;
}

std::string serialize_result(const ResultDoc& doc) {
  nlohmann::ordered_json j;
  j["kind"] = doc.kind;
  j["method"] = doc.method;
  if (doc.kind == "no_exact_equilibrium") {
    j["k_used"] = doc.k_used;
    j["profiles_checked"] = doc.profiles_checked;
    return dump_document(j);
  }
  j["guarantee"] = doc.guarantee;
  j["regrets"] = to_json(doc.regrets);
  j["profile"] = doc.profile;
  j["runtime_ms"] = doc.runtime_ms;
  return dump_document(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << text;
}

}  // namespace apxeq_cli
