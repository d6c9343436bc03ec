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

// Plain-text netlist, one statement per line:
//
//   qadd 1                  format version
//   qubits N                wire count
//   ancilla i j ...         ancilla wires (possibly none)
//   # role W LABEL          optional, one per labeled wire
//   x q | cx c t | ccx c1 c2 t | fo s t1 .. tk | tg c1 .. ck t
//
// Wire ids are decimal. Export is canonical: roles in wire order, gates in
// program order, single spaces, every line newline-terminated. Other lines
// starting with '#' and blank lines are ignored on input.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qadd/circuit.hpp"

namespace qadd {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

std::string export_netlist(const Circuit& circuit);

// Throws ParseError with a 1-based line and column.
Circuit parse_netlist(std::string_view text);

nlohmann::json to_json(const CircuitStats& stats);

}  // namespace qadd
