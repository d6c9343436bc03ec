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


#include "qadd/oracles.hpp"

namespace qadd {

Oracle adder_oracle(const Circuit& circuit) {
  const RoleMap& roles = circuit.roles();
  WireList a = roles.indexed("a");
  WireList b = roles.indexed("b");
  const auto z = roles.find("z");
  if (a.empty() || a.size() != b.size() || !z) {
    throw CircuitError("adder oracle needs wires labeled a0.., b0.. of equal width and z");
  }
  return [a = std::move(a), b = std::move(b), z = *z](const BitState& in) {
    BitState out = in;
    bool carry = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const bool x = in.get(a[i]);
      const bool y = in.get(b[i]);
      out.set(b[i], x ^ y ^ carry);
      carry = (x && y) || (carry && (x ^ y));
    }
    if (carry) out.flip(z);
    return out;
  };
}

Oracle fanout_oracle(WireId source, std::span<const WireId> targets) {
  return [source, targets = WireList(targets.begin(), targets.end())](const BitState& in) {
    BitState out = in;
    if (in.get(source)) {
      for (WireId t : targets) out.flip(t);
    }
    return out;
  };
}

Oracle fanout_oracle(const Circuit& circuit) {
  const auto src = circuit.roles().find("src");
  const WireList targets = circuit.roles().indexed("x");
  if (!src || targets.empty()) throw CircuitError("fan-out oracle needs wires labeled src and x0..");
  return fanout_oracle(*src, targets);
}

}  // namespace qadd
