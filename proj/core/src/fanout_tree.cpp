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

#include "qadd/fanout_tree.hpp"

#include <algorithm>
#include <string>

namespace qadd {

GateList fanout_tree_gates(WireId source, std::span<const WireId> targets,
                           std::size_t max_length) {
  if (targets.empty()) throw CircuitError("fan-out needs at least one target");
  if (max_length == 0) throw CircuitError("fan-out length bound must be positive");
  Gate::fanout(source, WireList(targets.begin(), targets.end())).validate();

  const std::size_t t = targets.size();
  if (t <= max_length) return {Gate::fanout(source, WireList(targets.begin(), targets.end()))};
  if (max_length == 1) {
    GateList chain;
    for (WireId w : targets) chain.push_back(Gate::cnot(source, w));
    return chain;
  }

  // Broadcast rounds: every current holder feeds up to f fresh targets.
  GateList tree;
  std::size_t holders = 1;
  std::size_t next = 1;
  while (next < t) {
    const std::size_t round_holders = holders;
    for (std::size_t h = 0; h < round_holders && next < t; ++h) {
      const std::size_t end = std::min(t, next + max_length);
      tree.push_back(Gate::fanout(targets[h], WireList(targets.begin() + next, targets.begin() + end)));
      holders += end - next;
      next = end;
    }
  }

  GateList gates = inverse(std::span<const Gate>(tree));
  gates.push_back(Gate::cnot(source, targets[0]));
  gates.insert(gates.end(), tree.begin(), tree.end());
  return gates;
}

Circuit synth_fanout_tree(std::size_t t, std::size_t max_length) {
  if (t == 0) throw CircuitError("fan-out needs at least one target");
  Circuit circuit(t + 1);
  WireList targets;
  for (std::size_t i = 1; i <= t; ++i) targets.emplace_back(static_cast<std::uint32_t>(i));
  circuit.roles().set(WireId(0), "src");
  for (std::size_t i = 0; i < t; ++i) circuit.roles().set(targets[i], "x" + std::to_string(i));
  circuit.append(fanout_tree_gates(WireId(0), targets, max_length));
  return circuit;
}

}  // namespace qadd
