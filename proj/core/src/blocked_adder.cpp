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

#include "qadd/blocked_adder.hpp"

#include <bit>
#include <string>

#include "qadd/ripple_adder.hpp"

namespace qadd {

namespace {

std::size_t floor_log2(std::size_t x) { return std::bit_width(x) - 1; }

void append_all(GateList& out, const GateList& more) {
  out.insert(out.end(), more.begin(), more.end());
}

WireId wire(std::size_t i) { return WireId(static_cast<std::uint32_t>(i)); }

// Addresses the p values of aligned leaf ranges: level 0 is the input p
// wires, level t >= 1 lives in scratch.
class PropagateLevels {
 public:
  PropagateLevels(std::span<const WireId> p, std::span<const WireId> scratch, std::size_t m)
      : p_(p), scratch_(scratch), m_(m) {}

  // p over leaves [2^t y, 2^t (y+1)), y >= 1.
  WireId at(std::size_t t, std::size_t y) const {
    if (t == 0) return p_[y];
    std::size_t offset = 0;
    for (std::size_t s = 1; s < t; ++s) offset += (m_ >> s) - 1;
    return scratch_[offset + y - 1];
  }

 private:
  std::span<const WireId> p_;
  std::span<const WireId> scratch_;
  std::size_t m_;
};

}  // namespace

BlockParams BlockParams::make(std::size_t n, std::size_t d) {
  if (n == 0 || !std::has_single_bit(n)) throw CircuitError("block adder needs n a power of two");
  if (d < 2) throw CircuitError("block adder needs d >= 2");
  BlockParams params;
  params.n = n;
  params.d = d;
  params.l = floor_log2(d) + 1;
  params.k = std::size_t{1} << (params.l - 1);
  if (params.k > n || n % params.k != 0 || n / params.k < 4) {
    throw CircuitError("block adder needs n/k >= 4 (n=" + std::to_string(n) +
                       ", k=" + std::to_string(params.k) + ")");
  }
  return params;
}

GateList barenco_first_half(std::span<const WireId> controls, std::span<const WireId> dirty,
                            WireId target) {
  const std::size_t w = controls.size();
  if (w < 2) throw CircuitError("ladder needs at least 2 controls");
  if (dirty.size() != w) throw CircuitError("ladder needs one dirty wire per control");
  GateList gates;
  gates.reserve(2 * w - 1);
  gates.push_back(Gate::toffoli(controls[w - 1], dirty[w - 1], target));
  for (std::size_t i = w - 2; i >= 1; --i) {
    gates.push_back(Gate::toffoli(controls[i], dirty[i], dirty[i + 1]));
  }
  gates.push_back(Gate::cnot(controls[0], dirty[1]));
  for (std::size_t i = 1; i + 1 < w; ++i) {
    gates.push_back(Gate::toffoli(controls[i], dirty[i], dirty[i + 1]));
  }
  gates.push_back(Gate::toffoli(controls[w - 1], dirty[w - 1], target));
  return gates;
}

GateList init_gates(std::span<const WireId> a, std::span<const WireId> b, WireId g, WireId p) {
  if (a.size() < 2) throw CircuitError("INIT needs w >= 2");
  GateList gates = adder_first_half(a, b, g);
  gates.push_back(Gate::cnot(a[0], b[0]));
  append_all(gates, barenco_first_half(b, a, p));
  return gates;
}

GateList sum_gates(std::span<const WireId> a, std::span<const WireId> b,
                   std::optional<WireId> carry_in) {
  const std::size_t w = a.size();
  if (w == 0 || b.size() != w) throw CircuitError("SUM needs matching positive widths");
  GateList gates;
  if (!carry_in) {
    // Ripple adder with the carry-out dropped.
    for (std::size_t i = 1; i < w; ++i) gates.push_back(Gate::cnot(a[i], b[i]));
    for (std::size_t i = w - 1; i >= 2; --i) gates.push_back(Gate::cnot(a[i - 1], a[i]));
    for (std::size_t i = 0; i + 1 < w; ++i) gates.push_back(Gate::toffoli(b[i], a[i], a[i + 1]));
    for (std::size_t i = w - 1; i >= 1; --i) {
      gates.push_back(Gate::cnot(a[i], b[i]));
      gates.push_back(Gate::toffoli(b[i - 1], a[i - 1], a[i]));
    }
    for (std::size_t i = 1; i + 1 < w; ++i) gates.push_back(Gate::cnot(a[i], a[i + 1]));
    for (std::size_t i = 0; i < w; ++i) gates.push_back(Gate::cnot(a[i], b[i]));
    return gates;
  }
  const WireId c = *carry_in;
  // A_j <- a_j ^ a_{j-1}, A_0 <- a_0 ^ c, B_j <- a_j ^ b_j.
  for (std::size_t j = 0; j < w; ++j) gates.push_back(Gate::cnot(a[j], b[j]));
  for (std::size_t j = w - 1; j >= 1; --j) gates.push_back(Gate::cnot(a[j - 1], a[j]));
  gates.push_back(Gate::cnot(c, a[0]));
  // A_j <- a_j ^ d_j.
  for (std::size_t j = 0; j + 1 < w; ++j) gates.push_back(Gate::toffoli(b[j], a[j], a[j + 1]));
  // B_j <- b_j ^ d_j while the A chain unwinds.
  for (std::size_t j = w - 1; j >= 1; --j) {
    gates.push_back(Gate::cnot(a[j], b[j]));
    gates.push_back(Gate::toffoli(b[j - 1], a[j - 1], a[j]));
  }
  gates.push_back(Gate::cnot(a[0], b[0]));
  gates.push_back(Gate::cnot(c, a[0]));
  for (std::size_t j = 1; j < w; ++j) gates.push_back(Gate::cnot(a[j - 1], a[j]));
  for (std::size_t j = 0; j < w; ++j) gates.push_back(Gate::cnot(a[j], b[j]));
  return gates;
}

std::size_t carry_scratch_count(std::size_t m) {
  if (m < 4 || !std::has_single_bit(m)) throw CircuitError("carry tree needs m = 2^L >= 4");
  std::size_t total = 0;
  for (std::size_t t = 1; t < floor_log2(m); ++t) total += (m >> t) - 1;
  return total;
}

GateList carry_tree_gates(std::span<const WireId> p, std::span<const WireId> g,
                          std::span<const WireId> scratch, bool include_top) {
  const std::size_t m = g.size();
  if (p.size() != m) throw CircuitError("carry tree needs one p slot per leaf");
  if (scratch.size() != carry_scratch_count(m)) throw CircuitError("carry tree scratch size");
  const std::size_t levels = floor_log2(m);
  const PropagateLevels prop(p, scratch, m);

  const auto propagate_round = [&](std::size_t t) {
    GateList round;
    const std::size_t count = m >> t;
    for (std::size_t y = 1; y < count; ++y) {
      if (!include_top && y == count - 1) continue;
      round.push_back(Gate::toffoli(prop.at(t - 1, 2 * y), prop.at(t - 1, 2 * y + 1), prop.at(t, y)));
    }
    return round;
  };

  GateList gates;
  for (std::size_t t = 1; t < levels; ++t) append_all(gates, propagate_round(t));
  // Up-sweep: g over aligned blocks of 2^t leaves.
  for (std::size_t t = 1; t <= levels; ++t) {
    const std::size_t span = std::size_t{1} << t;
    for (std::size_t y = 0; y < (m >> t); ++y) {
      const std::size_t right = span * y + span - 1;
      if (!include_top && right == m - 1) continue;
      gates.push_back(Gate::toffoli(g[span * y + span / 2 - 1], prop.at(t - 1, 2 * y + 1), g[right]));
    }
  }
  // Down-sweep, releasing each propagate level once its last reader is done.
  for (std::size_t t = levels - 1; t >= 1; --t) {
    const std::size_t span = std::size_t{1} << t;
    for (std::size_t y = 1; y <= (m - span / 2) / span; ++y) {
      gates.push_back(Gate::toffoli(g[span * y - 1], prop.at(t - 1, 2 * y), g[span * y + span / 2 - 1]));
    }
    append_all(gates, propagate_round(t));
  }
  return gates;
}

Circuit synth_init(std::size_t w) {
  if (w < 2) throw CircuitError("INIT needs w >= 2");
  const AdderWires wires = interleaved_adder_wires(w);
  const WireId g = wire(2 * w);
  const WireId p = wire(2 * w + 1);
  // G and P collect g[0,w] and p[0,w]; they are outputs, not ancilla.
  Circuit circuit(2 * w + 2);
  for (std::size_t i = 0; i < w; ++i) {
    circuit.roles().set(wires.a[i], "a" + std::to_string(i));
    circuit.roles().set(wires.b[i], "b" + std::to_string(i));
  }
  circuit.roles().set(g, "g");
  circuit.roles().set(p, "p");
  circuit.append(init_gates(wires.a, wires.b, g, p));
  return circuit;
}

Circuit synth_sum(std::size_t w, bool with_carry_in) {
  if (w == 0) throw CircuitError("SUM needs w >= 1");
  const AdderWires wires = interleaved_adder_wires(w);
  Circuit circuit(with_carry_in ? 2 * w + 1 : 2 * w);
  for (std::size_t i = 0; i < w; ++i) {
    circuit.roles().set(wires.a[i], "a" + std::to_string(i));
    circuit.roles().set(wires.b[i], "b" + std::to_string(i));
  }
  std::optional<WireId> carry;
  if (with_carry_in) {
    carry = wire(2 * w);
    circuit.roles().set(*carry, "c");
  }
  circuit.append(sum_gates(wires.a, wires.b, carry));
  return circuit;
}

Circuit synth_carry(std::size_t n, std::size_t l) {
  if (n == 0 || !std::has_single_bit(n)) throw CircuitError("CARRY needs n a power of two");
  if (l < 1 || l - 1 >= floor_log2(n)) throw CircuitError("CARRY level out of range");
  const std::size_t m = n >> (l - 1);
  const std::size_t scratch_count = carry_scratch_count(m);

  WireList p(m), g(m), scratch(scratch_count);
  std::size_t next = 0;
  for (std::size_t x = 1; x < m; ++x) p[x] = wire(next++);
  p[0] = p[1];  // never read by the tree
  for (std::size_t x = 0; x < m; ++x) g[x] = wire(next++);
  for (auto& s : scratch) s = wire(next++);

  Circuit circuit(next, scratch);
  for (std::size_t x = 1; x < m; ++x) circuit.roles().set(p[x], "p" + std::to_string(x));
  for (std::size_t x = 0; x < m; ++x) circuit.roles().set(g[x], "g" + std::to_string(x));
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    circuit.roles().set(scratch[i], "t" + std::to_string(i));
  }
  circuit.append(carry_tree_gates(p, g, scratch));
  return circuit;
}

Circuit synth_combined(const BlockParams& params) {
  const BlockParams checked = BlockParams::make(params.n, params.d);
  const std::size_t n = checked.n;
  const std::size_t k = checked.k;
  const std::size_t m = checked.blocks();

  const AdderWires adder = interleaved_adder_wires(n);
  std::size_t next = 2 * n + 1;
  WireList slots(m);  // carry slot of each block; the top block uses z
  WireList props(m);
  WireList scratch(carry_scratch_count(m));
  WireList ancilla;
  for (std::size_t j = 0; j + 1 < m; ++j) ancilla.push_back(slots[j] = wire(next++));
  slots[m - 1] = adder.z;
  for (auto& p : props) ancilla.push_back(p = wire(next++));
  for (auto& s : scratch) ancilla.push_back(s = wire(next++));

  Circuit circuit(next, ancilla);
  label_adder_roles(circuit, adder);
  for (std::size_t j = 0; j + 1 < m; ++j) circuit.roles().set(slots[j], "g" + std::to_string(j));
  for (std::size_t j = 0; j < m; ++j) circuit.roles().set(props[j], "p" + std::to_string(j));
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    circuit.roles().set(scratch[i], "t" + std::to_string(i));
  }

  const auto block_a = [&](std::size_t j) { return std::span(adder.a).subspan(j * k, k); };
  const auto block_b = [&](std::size_t j) { return std::span(adder.b).subspan(j * k, k); };

  // Per-block g/p for blocks [0, count).
  const auto init_blocks = [&](std::size_t count) {
    GateList gates;
    for (std::size_t j = 0; j < count; ++j) {
      append_all(gates, init_gates(block_a(j), block_b(j), slots[j], props[j]));
    }
    return gates;
  };

  // First half: block g/p, carries into the slots, then clear everything but
  // the slots.
  const GateList init_all = init_blocks(m);
  const GateList clear_all = inverse(std::span<const Gate>(exclude_wires(init_all, slots)));

  // Block sums, block j+1 taking its carry from slot j.
  GateList sums = sum_gates(block_a(0), block_b(0), std::nullopt);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    append_all(sums, sum_gates(block_a(j + 1), block_b(j + 1), slots[j]));
  }

  // Second half: a + ~s produces the same carries as a + b, so rerunning the
  // first half on the complemented low blocks clears the slots.
  GateList complement;
  for (std::size_t i = 0; i + k < n; ++i) complement.push_back(Gate::not_gate(adder.b[i]));
  const WireList lower_slots(slots.begin(), slots.end() - 1);
  const GateList init_lower = init_blocks(m - 1);
  GateList lower_half = init_lower;
  append_all(lower_half, carry_tree_gates(props, slots, scratch, /*include_top=*/false));
  append_all(lower_half, inverse(std::span<const Gate>(exclude_wires(init_lower, lower_slots))));

  circuit.append(init_all);
  circuit.append(carry_tree_gates(props, slots, scratch));
  circuit.append(clear_all);
  circuit.append(sums);
  circuit.append(complement);
  circuit.append(inverse(std::span<const Gate>(lower_half)));
  circuit.append(complement);
  return circuit;
}

}  // namespace qadd
