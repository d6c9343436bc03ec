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

// Reference behaviours used to check synthesized circuits.

#pragma once

#include <span>

#include "qadd/circuit.hpp"
#include "qadd/simulator.hpp"

namespace qadd {

// ADD_n on the wires labeled a0.., b0.., z: b <- low n bits of a+b,
// z ^= carry-out, everything else unchanged. Throws CircuitError when the
// labels are missing or the a and b widths differ.
Oracle adder_oracle(const Circuit& circuit);

// F_t: every target ^= source.
Oracle fanout_oracle(WireId source, std::span<const WireId> targets);

// Fan-out oracle for a circuit labeled src, x0, x1, ...
Oracle fanout_oracle(const Circuit& circuit);

}  // namespace qadd
