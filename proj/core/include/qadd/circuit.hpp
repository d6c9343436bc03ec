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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qadd {

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WireId {
  std::uint32_t index = 0;

  constexpr WireId() = default;
  constexpr explicit WireId(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(WireId, WireId) = default;
};

using WireList = std::vector<WireId>;

enum class GateKind : std::uint8_t { kNot, kCnot, kToffoli, kFanout, kGenToffoli };

const char* gate_kind_name(GateKind kind);

// One elementary reversible gate. Every kind is an involution on basis states.
//
// Operand layout by kind:
//   kNot        controls = {},        targets = {t}
//   kCnot       controls = {c},       targets = {t}
//   kToffoli    controls = {c1, c2},  targets = {t}
//   kFanout     controls = {source},  targets = {t1 .. tk}, k >= 1
//   kGenToffoli controls = {c1 .. ck}, targets = {t}, k >= 1
struct Gate {
  GateKind kind = GateKind::kNot;
  WireList controls;
  WireList targets;

  static Gate not_gate(WireId target);
  static Gate cnot(WireId control, WireId target);
  static Gate toffoli(WireId c1, WireId c2, WireId target);
  static Gate fanout(WireId source, WireList targets);
  static Gate gen_toffoli(WireList controls, WireId target);

  // Fanout length (number of targets); 1 for every other kind.
  std::size_t length() const { return targets.size(); }

  // Controls followed by targets.
  WireList operands() const;

  bool touches(WireId w) const;

  // Throws CircuitError on a malformed operand shape or repeated wire.
  void validate() const;

  bool operator==(const Gate&) const = default;
};

using GateList = std::vector<Gate>;

// Per-wire role labels ("a3", "b3", "z", "g0", "p1", ...). Empty label means
// unlabeled. Labels are unique among labeled wires.
class RoleMap {
 public:
  RoleMap() = default;
  explicit RoleMap(std::size_t wire_count) : labels_(wire_count) {}

  void set(WireId w, std::string label);
  const std::string& label(WireId w) const;
  std::optional<WireId> find(const std::string& label) const;
  // Wires labeled prefix0, prefix1, ... up to the first missing index.
  WireList indexed(const std::string& prefix) const;
  bool empty() const;
  std::size_t size() const { return labels_.size(); }

  bool operator==(const RoleMap& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> by_label_;
};

class Circuit {
 public:
  // Throws CircuitError if wire_count is zero or an ancilla is out of range.
  Circuit(std::size_t wire_count, std::initializer_list<std::uint32_t> ancilla);
  Circuit(std::size_t wire_count, WireList ancilla = {});

  std::size_t wire_count() const { return wire_count_; }
  const GateList& gates() const { return gates_; }
  // Sorted, duplicate-free.
  const WireList& ancilla() const { return ancilla_; }
  bool is_ancilla(WireId w) const;

  const RoleMap& roles() const { return roles_; }
  RoleMap& roles() { return roles_; }

  // Throws CircuitError on a malformed gate or an operand >= wire_count.
  void append(Gate gate);
  void append(std::span<const Gate> gates);

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t wire_count_;
  WireList ancilla_;
  GateList gates_;
  RoleMap roles_;
};

// Free-function spelling used throughout the synthesis code.
Circuit build_circuit(std::size_t wire_count, WireList ancilla = {});

// Same wires, gates in reverse order. Every supported gate is self-inverse.
Circuit inverse(const Circuit& circuit);
GateList inverse(std::span<const Gate> gates);

// Drops every gate that touches one of `wires`.
GateList exclude_wires(std::span<const Gate> gates, std::span<const WireId> wires);

struct CircuitStats {
  std::int64_t depth = 0;
  std::int64_t toffoli_depth = 0;
  std::int64_t size = 0;
  std::int64_t count_not = 0;
  std::int64_t count_cnot = 0;
  std::int64_t count_toffoli = 0;
  std::int64_t count_fanout = 0;
  std::int64_t count_gen_toffoli = 0;
  std::int64_t ancilla_count = 0;
  std::int64_t max_fanout_length = 0;

  bool operator==(const CircuitStats&) const = default;
};

// Depth follows the wire-sharing dependency DAG: a gate sits one layer above
// the latest earlier gate that touches any of its operands; inputs are depth
// 0. toffoli_depth is the heaviest path in the same DAG where Toffoli and
// GenToffoli weigh 1 and everything else weighs 0.
CircuitStats compute_stats(const Circuit& circuit);

class Layout {
 public:
  // `positions[w]` is the line position of wire w. Throws CircuitError unless
  // the mapping is a bijection onto 0..n-1.
  explicit Layout(std::vector<std::uint32_t> positions);

  std::uint32_t position(WireId w) const;
  std::size_t size() const { return positions_.size(); }

  static Layout identity(std::size_t wire_count);

 private:
  std::vector<std::uint32_t> positions_;
};

// B_i -> 2i, A_i -> 2i+1, Z -> 2n, resolved through the "a<i>", "b<i>", "z"
// role labels. Any remaining wires follow in index order.
Layout interleaved_layout(const Circuit& circuit);

// Max over gates of (max operand position - min operand position). Throws
// CircuitError if the layout does not cover every wire.
std::uint32_t max_window_span(const Circuit& circuit, const Layout& layout);

}  // namespace qadd
