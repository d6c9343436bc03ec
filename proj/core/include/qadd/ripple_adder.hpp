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

#include <cstddef>
#include <span>

#include "qadd/circuit.hpp"

namespace qadd {

// Wire roles of an in-place n-bit adder: B_i, A_i and the carry-out Z.
struct AdderWires {
  WireList a;
  WireList b;
  WireId z;
};

// Standard layout used by synth_ripple: b_i = 2i, a_i = 2i+1, z = 2n.
AdderWires interleaved_adder_wires(std::size_t n);

// Labels a<i>, b<i> and z on the circuit's role map.
void label_adder_roles(Circuit& circuit, const AdderWires& wires);

// |c>|b>|a> -> |c^a>|b^a>|MAJ(a,b,c)>: two CNOTs then a Toffoli.
GateList maj_fragment(WireId c, WireId b, WireId a);

// The no-ancilla ripple-carry adder. On (a, b, z) leaves B = low n bits of
// a + b, A unchanged and Z = z ^ carry-out. Emits 7n-6 gates for n >= 3.
GateList ripple_adder_gates(const AdderWires& wires);

// The first three adder steps only. On (a, b, 0) this leaves B_0 = b_0,
// A_0 = a_0, B_i = a_i ^ b_i, A_i = a_i ^ c_i for 1 <= i < n and
// carry_out = c_n. Throws CircuitError if the operand widths differ or are 0.
GateList adder_first_half(std::span<const WireId> a, std::span<const WireId> b,
                          WireId carry_out);

// ADD_n on 2n+1 wires in the interleaved layout, no ancilla. Throws
// CircuitError for n = 0.
Circuit synth_ripple(std::size_t n);

}  // namespace qadd
