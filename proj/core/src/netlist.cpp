// Copyright 2026 The qadd Authors
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

#include "qadd/netlist.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace qadd {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

namespace {

const char* opcode(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return "x";
    case GateKind::kCnot:
      return "cx";
    case GateKind::kToffoli:
      return "ccx";
    case GateKind::kFanout:
      return "fo";
    case GateKind::kGenToffoli:
      return "tg";
  }
  return "?";
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Circuit parse() {
    std::optional<Circuit> circuit;
    std::size_t header = 0;  // statements of the header consumed so far
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      const std::string_view line = text_.substr(pos, end - pos);
      pos = end + 1;
      const auto tokens = tokenize(line);
      if (tokens.empty()) continue;

      if (tokens[0].text.starts_with("#")) {
        if (tokens[0].text == "#" && tokens.size() >= 2 && tokens[1].text == "role") {
          if (header < 3) fail(tokens[0], "role annotation before header");
          parse_role(*circuit, tokens);
        }
        continue;
      }

      if (header == 0) {
        expect_keyword(tokens[0], "qadd");
        if (tokens.size() != 2 || tokens[1].text != "1") fail(tokens[0], "expected 'qadd 1'");
        ++header;
      } else if (header == 1) {
        expect_keyword(tokens[0], "qubits");
        if (tokens.size() != 2) fail(tokens[0], "expected 'qubits N'");
        const std::size_t wires = number(tokens[1]);
        if (wires == 0) fail(tokens[1], "wire count must be positive");
        wire_count_ = wires;
        ++header;
      } else if (header == 2) {
        expect_keyword(tokens[0], "ancilla");
        WireList ancilla;
        for (std::size_t i = 1; i < tokens.size(); ++i) ancilla.push_back(wire(tokens[i]));
        circuit.emplace(wire_count_, std::move(ancilla));
        ++header;
      } else {
        parse_gate(*circuit, tokens);
      }
    }
    if (header < 3) fail_at(line_no_, 1, "missing header");
    return std::move(*circuit);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& reason) const {
    throw ParseError(line_no_, at.column, reason);
  }
  [[noreturn]] static void fail_at(std::size_t line, std::size_t column, const std::string& reason) {
    throw ParseError(line, column, reason);
  }

  void expect_keyword(const Token& t, std::string_view keyword) const {
    if (t.text != keyword) fail(t, "expected '" + std::string(keyword) + "'");
  }

  std::size_t number(const Token& t) const {
    std::size_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail(t, "expected a decimal number");
    return value;
  }

  WireId wire(const Token& t) const {
    const std::size_t value = number(t);
    if (value >= wire_count_) {
      fail(t, "wire " + std::to_string(value) + " out of range (qubits " +
                  std::to_string(wire_count_) + ")");
    }
    return WireId(static_cast<std::uint32_t>(value));
  }

  void parse_role(Circuit& circuit, const std::vector<Token>& tokens) const {
    if (tokens.size() != 4) fail(tokens[0], "expected '# role WIRE LABEL'");
    try {
      circuit.roles().set(wire(tokens[2]), std::string(tokens[3].text));
    } catch (const CircuitError& e) {
      fail(tokens[3], e.what());
    }
  }

  void parse_gate(Circuit& circuit, const std::vector<Token>& tokens) const {
    const Token& op = tokens[0];
    WireList operands;
    for (std::size_t i = 1; i < tokens.size(); ++i) operands.push_back(wire(tokens[i]));
    const auto arity = [&](std::size_t want) {
      if (operands.size() != want) {
        fail(op, "'" + std::string(op.text) + "' takes " + std::to_string(want) + " operands");
      }
    };
    Gate gate;
    if (op.text == "x") {
      arity(1);
      gate = Gate::not_gate(operands[0]);
    } else if (op.text == "cx") {
      arity(2);
      gate = Gate::cnot(operands[0], operands[1]);
    } else if (op.text == "ccx") {
      arity(3);
      gate = Gate::toffoli(operands[0], operands[1], operands[2]);
    } else if (op.text == "fo") {
      if (operands.size() < 2) fail(op, "'fo' takes a source and at least one target");
      gate = Gate::fanout(operands[0], WireList(operands.begin() + 1, operands.end()));
    } else if (op.text == "tg") {
      if (operands.size() < 2) fail(op, "'tg' takes at least one control and a target");
      gate = Gate::gen_toffoli(WireList(operands.begin(), operands.end() - 1), operands.back());
    } else {
      fail(op, "unknown opcode '" + std::string(op.text) + "'");
    }
    try {
      circuit.append(std::move(gate));
    } catch (const CircuitError& e) {
      fail(op, e.what());
    }
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::size_t wire_count_ = 0;
};

}  // namespace

std::string export_netlist(const Circuit& circuit) {
  std::string out = "qadd 1\nqubits " + std::to_string(circuit.wire_count()) + "\nancilla";
  for (WireId a : circuit.ancilla()) out += " " + std::to_string(a.index);
  out += "\n";
  for (std::uint32_t i = 0; i < circuit.wire_count(); ++i) {
    const std::string& label = circuit.roles().label(WireId(i));
    if (!label.empty()) out += "# role " + std::to_string(i) + " " + label + "\n";
  }
  for (const Gate& g : circuit.gates()) {
    out += opcode(g.kind);
    for (WireId c : g.controls) out += " " + std::to_string(c.index);
    for (WireId t : g.targets) out += " " + std::to_string(t.index);
    out += "\n";
  }
  return out;
}

Circuit parse_netlist(std::string_view text) { return Parser(text).parse(); }

nlohmann::json to_json(const CircuitStats& stats) {
  return {
      {"depth", stats.depth},
      {"toffoli_depth", stats.toffoli_depth},
      {"size", stats.size},
      {"count_not", stats.count_not},
      {"count_cnot", stats.count_cnot},
      {"count_toffoli", stats.count_toffoli},
      {"count_fanout", stats.count_fanout},
      {"count_gen_toffoli", stats.count_gen_toffoli},
      {"ancilla_count", stats.ancilla_count},
      {"max_fanout_length", stats.max_fanout_length},
  };
}

}  // namespace qadd
