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

#include "qadd/circuit.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qadd {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return "not";
    case GateKind::kCnot:
      return "cnot";
    case GateKind::kToffoli:
      return "toffoli";
    case GateKind::kFanout:
      return "fanout";
    case GateKind::kGenToffoli:
      return "gen_toffoli";
  }
  return "?";
}

Gate Gate::not_gate(WireId target) { return Gate{GateKind::kNot, {}, {target}}; }

Gate Gate::cnot(WireId control, WireId target) {
  return Gate{GateKind::kCnot, {control}, {target}};
}

Gate Gate::toffoli(WireId c1, WireId c2, WireId target) {
  return Gate{GateKind::kToffoli, {c1, c2}, {target}};
}

Gate Gate::fanout(WireId source, WireList targets) {
  return Gate{GateKind::kFanout, {source}, std::move(targets)};
}

Gate Gate::gen_toffoli(WireList controls, WireId target) {
  return Gate{GateKind::kGenToffoli, std::move(controls), {target}};
}

WireList Gate::operands() const {
  WireList all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  return all;
}

bool Gate::touches(WireId w) const {
  return std::find(controls.begin(), controls.end(), w) != controls.end() ||
         std::find(targets.begin(), targets.end(), w) != targets.end();
}

void Gate::validate() const {
  const auto shape_error = [this](const char* what) {
    return CircuitError(std::string(gate_kind_name(kind)) + ": " + what);
  };
  switch (kind) {
    case GateKind::kNot:
      if (!controls.empty() || targets.size() != 1) throw shape_error("expects 1 target");
      break;
    case GateKind::kCnot:
      if (controls.size() != 1 || targets.size() != 1)
        throw shape_error("expects 1 control and 1 target");
      break;
    case GateKind::kToffoli:
      if (controls.size() != 2 || targets.size() != 1)
        throw shape_error("expects 2 controls and 1 target");
      break;
    case GateKind::kFanout:
      if (controls.size() != 1 || targets.empty())
        throw shape_error("expects 1 source and at least 1 target");
      break;
    case GateKind::kGenToffoli:
      if (controls.empty() || targets.size() != 1)
        throw shape_error("expects at least 1 control and 1 target");
      break;
  }
  WireList all = operands();
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw shape_error("duplicate operand wire");
  }
}

void RoleMap::set(WireId w, std::string label) {
  if (w.index >= labels_.size()) throw CircuitError("role for out-of-range wire");
  if (!label.empty()) {
    auto existing = find(label);
    if (existing && *existing != w) throw CircuitError("duplicate role label '" + label + "'");
  }
  if (!labels_[w.index].empty()) by_label_.erase(labels_[w.index]);
  if (!label.empty()) by_label_[label] = w.index;
  labels_[w.index] = std::move(label);
}

const std::string& RoleMap::label(WireId w) const {
  static const std::string kEmpty;
  return w.index < labels_.size() ? labels_[w.index] : kEmpty;
}

std::optional<WireId> RoleMap::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return WireId(it->second);
}

WireList RoleMap::indexed(const std::string& prefix) const {
  WireList out;
  for (std::size_t i = 0;; ++i) {
    auto w = find(prefix + std::to_string(i));
    if (!w) break;
    out.push_back(*w);
  }
  return out;
}

bool RoleMap::empty() const {
  return by_label_.empty();
}

Circuit::Circuit(std::size_t wire_count, std::initializer_list<std::uint32_t> ancilla)
    : Circuit(wire_count, [&] {
        WireList list;
        for (auto a : ancilla) list.emplace_back(a);
        return list;
      }()) {}

Circuit::Circuit(std::size_t wire_count, WireList ancilla)
    : wire_count_(wire_count), ancilla_(std::move(ancilla)), roles_(wire_count) {
  if (wire_count_ == 0) throw CircuitError("circuit needs at least one wire");
  std::sort(ancilla_.begin(), ancilla_.end());
  ancilla_.erase(std::unique(ancilla_.begin(), ancilla_.end()), ancilla_.end());
  if (!ancilla_.empty() && ancilla_.back().index >= wire_count_) {
    throw CircuitError("ancilla wire " + std::to_string(ancilla_.back().index) +
                       " out of range");
  }
}

bool Circuit::is_ancilla(WireId w) const {
  return std::binary_search(ancilla_.begin(), ancilla_.end(), w);
}

void Circuit::append(Gate gate) {
  gate.validate();
  for (WireId w : gate.operands()) {
    if (w.index >= wire_count_) {
      throw CircuitError("wire " + std::to_string(w.index) + " out of range (wire count " +
                         std::to_string(wire_count_) + ")");
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const Gate> gates) {
  gates_.reserve(gates_.size() + gates.size());
  for (const Gate& g : gates) append(g);
}

Circuit build_circuit(std::size_t wire_count, WireList ancilla) {
  return Circuit(wire_count, std::move(ancilla));
}

GateList inverse(std::span<const Gate> gates) { return GateList(gates.rbegin(), gates.rend()); }

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.wire_count(), circuit.ancilla());
  out.roles() = circuit.roles();
  out.append(inverse(std::span<const Gate>(circuit.gates())));
  return out;
}

GateList exclude_wires(std::span<const Gate> gates, std::span<const WireId> wires) {
  GateList kept;
  kept.reserve(gates.size());
  for (const Gate& g : gates) {
    bool hit = std::any_of(wires.begin(), wires.end(), [&](WireId w) { return g.touches(w); });
    if (!hit) kept.push_back(g);
  }
  return kept;
}

CircuitStats compute_stats(const Circuit& circuit) {
  CircuitStats stats;
  stats.ancilla_count = static_cast<std::int64_t>(circuit.ancilla().size());
  // Depth / weighted depth of the last gate to touch each wire.
  std::vector<std::int64_t> wire_depth(circuit.wire_count(), 0);
  std::vector<std::int64_t> wire_tdepth(circuit.wire_count(), 0);

  const auto visit = [&](std::span<const WireId> ws, std::int64_t& depth, std::int64_t& tdepth) {
    for (WireId w : ws) {
      depth = std::max(depth, wire_depth[w.index]);
      tdepth = std::max(tdepth, wire_tdepth[w.index]);
    }
  };

  for (const Gate& g : circuit.gates()) {
    std::int64_t depth = 0;
    std::int64_t tdepth = 0;
    visit(g.controls, depth, tdepth);
    visit(g.targets, depth, tdepth);
    depth += 1;
    switch (g.kind) {
      case GateKind::kNot:
        ++stats.count_not;
        break;
      case GateKind::kCnot:
        ++stats.count_cnot;
        break;
      case GateKind::kToffoli:
        ++stats.count_toffoli;
        tdepth += 1;
        break;
      case GateKind::kFanout:
        ++stats.count_fanout;
        stats.max_fanout_length =
            std::max(stats.max_fanout_length, static_cast<std::int64_t>(g.targets.size()));
        break;
      case GateKind::kGenToffoli:
        ++stats.count_gen_toffoli;
        tdepth += 1;
        break;
    }
    for (const WireList* ws : {&g.controls, &g.targets}) {
      for (WireId w : *ws) {
        wire_depth[w.index] = depth;
        wire_tdepth[w.index] = tdepth;
      }
    }
    stats.depth = std::max(stats.depth, depth);
    stats.toffoli_depth = std::max(stats.toffoli_depth, tdepth);
  }
  stats.size = static_cast<std::int64_t>(circuit.gates().size());
  return stats;
}

Layout::Layout(std::vector<std::uint32_t> positions) : positions_(std::move(positions)) {
  std::vector<bool> seen(positions_.size(), false);
  for (auto p : positions_) {
    if (p >= positions_.size() || seen[p]) throw CircuitError("layout is not a bijection");
    seen[p] = true;
  }
}

std::uint32_t Layout::position(WireId w) const {
  if (w.index >= positions_.size()) {
    throw CircuitError("layout has no position for wire " + std::to_string(w.index));
  }
  return positions_[w.index];
}

Layout Layout::identity(std::size_t wire_count) {
  std::vector<std::uint32_t> pos(wire_count);
  for (std::size_t i = 0; i < wire_count; ++i) pos[i] = static_cast<std::uint32_t>(i);
  return Layout(std::move(pos));
}

Layout interleaved_layout(const Circuit& circuit) {
  const RoleMap& roles = circuit.roles();
  WireList a = roles.indexed("a");
  WireList b = roles.indexed("b");
  if (a.size() != b.size()) throw CircuitError("interleaved layout needs matching a/b roles");

  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> pos(circuit.wire_count(), kUnset);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pos[b[i].index] = next++;
    pos[a[i].index] = next++;
  }
  if (auto z = roles.find("z")) pos[z->index] = next++;
  for (auto& p : pos) {
    if (p == kUnset) p = next++;
  }
  return Layout(std::move(pos));
}

std::uint32_t max_window_span(const Circuit& circuit, const Layout& layout) {
  if (layout.size() < circuit.wire_count()) {
    throw CircuitError("layout does not cover every wire");
  }
  std::uint32_t span = 0;
  for (const Gate& g : circuit.gates()) {
    std::uint32_t lo = ~0u;
    std::uint32_t hi = 0;
    for (const WireList* ws : {&g.controls, &g.targets}) {
      for (WireId w : *ws) {
        lo = std::min(lo, layout.position(w));
        hi = std::max(hi, layout.position(w));
      }
    }
    span = std::max(span, hi - lo);
  }
  return span;
}

}  // namespace qadd
