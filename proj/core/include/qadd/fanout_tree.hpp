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

// Gates equivalent to one fan-out of `source` into every wire of `targets`,
// using only fan-outs of length <= max_length and no ancilla.
//
// For t <= f this is the single gate. Otherwise a broadcast tree U, rooted
// at targets[0] and spreading over all targets with fan-outs of length f,
// is conjugated around one CNOT from the source into the root:
//   U^-1, CNOT(source -> root), U.
// Over GF(2) U maps the root's unit vector to the all-ones vector, so the
// source bit lands on every target while the targets' own contents cancel.
// Depth 2 * ceil(log_{f+1} t) + 1 and size 2 * ceil((t-1)/f) + 1.
//
// max_length = 1 falls back to a chain of t CNOTs from the source.
// Throws CircuitError on empty targets, f = 0 or repeated wires.
GateList fanout_tree_gates(WireId source, std::span<const WireId> targets,
                           std::size_t max_length);

// Standalone circuit: source = wire 0, targets = wires 1..t.
Circuit synth_fanout_tree(std::size_t t, std::size_t max_length);

}  // namespace qadd
