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

#include "qadd/ripple_adder.hpp"

#include <string>

namespace qadd {

namespace {

void check_widths(std::span<const WireId> a, std::span<const WireId> b) {
  if (a.empty()) throw CircuitError("adder width must be positive");
  if (a.size() != b.size()) throw CircuitError("adder operands differ in width");
}

// The carry chain A_0 .. A_{n-1}, A_n = carry wire.
WireList carry_chain(std::span<const WireId> a, WireId top) {
  WireList chain(a.begin(), a.end());
  chain.push_back(top);
  return chain;
}

}  // namespace

AdderWires interleaved_adder_wires(std::size_t n) {
  AdderWires w;
  for (std::size_t i = 0; i < n; ++i) {
    w.b.emplace_back(static_cast<std::uint32_t>(2 * i));
    w.a.emplace_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  w.z = WireId(static_cast<std::uint32_t>(2 * n));
  return w;
}

void label_adder_roles(Circuit& circuit, const AdderWires& wires) {
  for (std::size_t i = 0; i < wires.a.size(); ++i) {
    circuit.roles().set(wires.a[i], "a" + std::to_string(i));
    circuit.roles().set(wires.b[i], "b" + std::to_string(i));
  }
  circuit.roles().set(wires.z, "z");
}

GateList maj_fragment(WireId c, WireId b, WireId a) {
  GateList gates{Gate::cnot(a, b), Gate::cnot(a, c), Gate::toffoli(c, b, a)};
  for (const Gate& g : gates) g.validate();
  return gates;
}

GateList adder_first_half(std::span<const WireId> a, std::span<const WireId> b,
                          WireId carry_out) {
  check_widths(a, b);
  const std::size_t n = a.size();
  const WireList chain = carry_chain(a, carry_out);
  GateList gates;
  gates.reserve(3 * n);
  for (std::size_t i = 1; i < n; ++i) gates.push_back(Gate::cnot(a[i], b[i]));
  for (std::size_t i = n - 1; i >= 1; --i) gates.push_back(Gate::cnot(chain[i], chain[i + 1]));
  for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::toffoli(b[i], chain[i], chain[i + 1]));
  return gates;
}

GateList ripple_adder_gates(const AdderWires& wires) {
  const auto& a = wires.a;
  const auto& b = wires.b;
  GateList gates = adder_first_half(a, b, wires.z);
  const std::size_t n = a.size();
  const WireList chain = carry_chain(a, wires.z);
  // Unwind the carries while writing b_i ^ c_i.
  for (std::size_t i = n - 1; i >= 1; --i) {
    gates.push_back(Gate::cnot(chain[i], b[i]));
    gates.push_back(Gate::toffoli(b[i - 1], chain[i - 1], chain[i]));
  }
  // Restore A_i.
  for (std::size_t i = 1; i + 1 < n; ++i) gates.push_back(Gate::cnot(chain[i], chain[i + 1]));
  // B_i ^= a_i leaves the sum bits.
  for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::cnot(a[i], b[i]));
  return gates;
}

Circuit synth_ripple(std::size_t n) {
  if (n == 0) throw CircuitError("ripple adder needs n >= 1");
  const AdderWires wires = interleaved_adder_wires(n);
  Circuit circuit(2 * n + 1);
  label_adder_roles(circuit, wires);
  circuit.append(ripple_adder_gates(wires));
  return circuit;
}

}  // namespace qadd
