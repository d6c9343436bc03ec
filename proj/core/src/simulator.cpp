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

#include "qadd/simulator.hpp"

#include <algorithm>
#include <utility>

namespace qadd {

BitState BitState::from_string(std::string_view bits) {
  BitState s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw SimulationError("bit string must be 0/1");
    s.bits_[i] = bits[i] == '1';
  }
  return s;
}

std::string BitState::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? '1' : '0';
  return out;
}

void PackedState::load_lane(std::size_t lane, const BitState& s) {
  const std::uint64_t bit = std::uint64_t{1} << lane;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (s.get(WireId(static_cast<std::uint32_t>(w)))) {
      words_[w] |= bit;
    } else {
      words_[w] &= ~bit;
    }
  }
}

BitState PackedState::lane(std::size_t lane) const {
  BitState s(words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    s.set(WireId(static_cast<std::uint32_t>(w)), (words_[w] >> lane) & 1);
  }
  return s;
}

void PackedState::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::kNot:
      words_[g.targets[0].index] = ~words_[g.targets[0].index];
      break;
    case GateKind::kCnot:
      words_[g.targets[0].index] ^= words_[g.controls[0].index];
      break;
    case GateKind::kToffoli:
      words_[g.targets[0].index] ^= words_[g.controls[0].index] & words_[g.controls[1].index];
      break;
    case GateKind::kFanout: {
      const std::uint64_t y = words_[g.controls[0].index];
      for (WireId t : g.targets) words_[t.index] ^= y;
      break;
    }
    case GateKind::kGenToffoli: {
      std::uint64_t all = ~std::uint64_t{0};
      for (WireId c : g.controls) all &= words_[c.index];
      words_[g.targets[0].index] ^= all;
      break;
    }
  }
}

void PackedState::run(const Circuit& circuit) {
  if (circuit.wire_count() != words_.size()) throw SimulationError("state/circuit size mismatch");
  for (const Gate& g : circuit.gates()) apply(g);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void apply_gate(BitState& state, const Gate& gate) {
  for (WireId w : gate.operands()) {
    if (w.index >= state.size()) throw SimulationError("gate operand outside state");
  }
  switch (gate.kind) {
    case GateKind::kNot:
      state.flip(gate.targets[0]);
      break;
    case GateKind::kCnot:
      if (state.get(gate.controls[0])) state.flip(gate.targets[0]);
      break;
    case GateKind::kToffoli:
      if (state.get(gate.controls[0]) && state.get(gate.controls[1])) state.flip(gate.targets[0]);
      break;
    case GateKind::kFanout:
      if (state.get(gate.controls[0])) {
        for (WireId t : gate.targets) state.flip(t);
      }
      break;
    case GateKind::kGenToffoli:
      if (std::all_of(gate.controls.begin(), gate.controls.end(),
                      [&](WireId c) { return state.get(c); })) {
        state.flip(gate.targets[0]);
      }
      break;
  }
}

BitState run(const Circuit& circuit, BitState input) {
  if (input.size() != circuit.wire_count()) throw SimulationError("state/circuit size mismatch");
  for (WireId a : circuit.ancilla()) {
    if (input.get(a)) {
      throw SimulationError("ancilla wire " + std::to_string(a.index) + " is nonzero on input");
    }
  }
  for (const Gate& g : circuit.gates()) apply_gate(input, g);
  return input;
}

WireList input_wires(const Circuit& circuit) {
  WireList out;
  for (std::uint32_t i = 0; i < circuit.wire_count(); ++i) {
    WireId w(i);
    if (circuit.is_ancilla(w) || circuit.roles().label(w).starts_with("scratch")) continue;
    out.push_back(w);
  }
  return out;
}

namespace {

// Runs batches of up to 64 inputs and folds the results into a report.
class Checker {
 public:
  Checker(const Circuit& circuit, const Oracle& oracle) : circuit_(circuit), oracle_(oracle) {
    for (std::uint32_t i = 0; i < circuit.wire_count(); ++i) {
      WireId w(i);
      if (circuit.is_ancilla(w)) continue;
      if (circuit.roles().label(w).starts_with("scratch")) continue;
      compared_.push_back(w);
    }
  }

  void check(std::span<const BitState> inputs, VerifyReport& report) const {
    PackedState packed(circuit_.wire_count());
    for (std::size_t lane = 0; lane < inputs.size(); ++lane) packed.load_lane(lane, inputs[lane]);
    packed.run(circuit_);

    std::uint64_t dirty = 0;
    for (WireId a : circuit_.ancilla()) dirty |= packed.word(a);

    for (std::size_t lane = 0; lane < inputs.size(); ++lane) {
      ++report.total_cases;
      BitState actual = packed.lane(lane);
      BitState expected = oracle_(inputs[lane]);
      bool ok = expected.size() == actual.size();
      for (std::size_t i = 0; ok && i < compared_.size(); ++i) {
        ok = expected.get(compared_[i]) == actual.get(compared_[i]);
      }
      if (!ok) {
        ++report.failure_count;
        if (report.failures.size() < VerifyReport::kMaxRecorded) {
          report.failures.push_back({inputs[lane], std::move(expected), std::move(actual)});
        }
      }
      if ((dirty >> lane) & 1) {
        ++report.ancilla_violation_count;
        if (report.ancilla_violations.size() < VerifyReport::kMaxRecorded) {
          report.ancilla_violations.push_back(inputs[lane]);
        }
      }
    }
  }

 private:
  const Circuit& circuit_;
  const Oracle& oracle_;
  WireList compared_;
};

void check_free_wires(const Circuit& circuit, std::span<const WireId> free_wires) {
  for (WireId w : free_wires) {
    if (w.index >= circuit.wire_count()) throw SimulationError("free wire out of range");
    if (circuit.is_ancilla(w)) throw SimulationError("ancilla wires cannot be free inputs");
  }
}

}  // namespace

VerifyReport verify_exhaustive(const Circuit& circuit, const Oracle& oracle,
                               std::span<const WireId> free_wires) {
  if (free_wires.size() > kExhaustiveCap) {
    throw SimulationError("exhaustive verification capped at " + std::to_string(kExhaustiveCap) +
                          " free wires, got " + std::to_string(free_wires.size()));
  }
  check_free_wires(circuit, free_wires);
  const Checker checker(circuit, oracle);
  VerifyReport report;
  const std::uint64_t total = std::uint64_t{1} << free_wires.size();
  std::vector<BitState> batch;
  batch.reserve(PackedState::kLanes);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    BitState s(circuit.wire_count());
    for (std::size_t i = 0; i < free_wires.size(); ++i) s.set(free_wires[i], (idx >> i) & 1);
    batch.push_back(std::move(s));
    if (batch.size() == PackedState::kLanes || idx + 1 == total) {
      checker.check(batch, report);
      batch.clear();
    }
  }
  return report;
}

VerifyReport verify_random(const Circuit& circuit, const Oracle& oracle,
                           std::span<const WireId> free_wires, std::uint64_t trials,
                           std::uint64_t seed) {
  if (trials == 0) throw SimulationError("verify_random needs at least one trial");
  check_free_wires(circuit, free_wires);
  const Checker checker(circuit, oracle);
  VerifyReport report;
  report.seed = seed;
  SplitMix64 rng(seed);
  std::vector<BitState> batch;
  batch.reserve(PackedState::kLanes);
  for (std::uint64_t t = 0; t < trials; ++t) {
    BitState s(circuit.wire_count());
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < free_wires.size(); ++i) {
      if (i % 64 == 0) word = rng.next();
      s.set(free_wires[i], (word >> (i % 64)) & 1);
    }
    batch.push_back(std::move(s));
    if (batch.size() == PackedState::kLanes || t + 1 == trials) {
      checker.check(batch, report);
      batch.clear();
    }
  }
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed();
  j["total_cases"] = report.total_cases;
  j["failure_count"] = report.failure_count;
  j["ancilla_violation_count"] = report.ancilla_violation_count;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"input", f.input.to_string()},
                             {"expected", f.expected.to_string()},
                             {"actual", f.actual.to_string()}});
  }
  j["ancilla_violations"] = nlohmann::json::array();
  for (const auto& v : report.ancilla_violations) j["ancilla_violations"].push_back(v.to_string());
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  return j;
}

}  // namespace qadd
