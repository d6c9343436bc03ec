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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qadd/circuit.hpp"

namespace qadd {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One classical bit per wire.
class BitState {
 public:
  BitState() = default;
  explicit BitState(std::size_t wire_count) : bits_(wire_count, 0) {}
  // '0'/'1' per wire, wire 0 first.
  static BitState from_string(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool get(WireId w) const { return bits_.at(w.index) != 0; }
  void set(WireId w, bool v) { bits_.at(w.index) = v ? 1 : 0; }
  void flip(WireId w) { bits_.at(w.index) ^= 1; }

  std::string to_string() const;

  bool operator==(const BitState&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// 64 independent BitStates evaluated in lockstep: bit `lane` of word w is the
// value of wire w in state `lane`.
class PackedState {
 public:
  static constexpr std::size_t kLanes = 64;

  explicit PackedState(std::size_t wire_count) : words_(wire_count, 0) {}

  std::size_t size() const { return words_.size(); }
  std::uint64_t& word(WireId w) { return words_[w.index]; }
  std::uint64_t word(WireId w) const { return words_[w.index]; }

  void load_lane(std::size_t lane, const BitState& s);
  BitState lane(std::size_t lane) const;

  void apply(const Gate& gate);
  void run(const Circuit& circuit);

 private:
  std::vector<std::uint64_t> words_;
};

// Deterministic generator used by every seeded harness.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Throws SimulationError if an operand is outside the state.
void apply_gate(BitState& state, const Gate& gate);

// Throws SimulationError on a length mismatch or a nonzero ancilla input.
BitState run(const Circuit& circuit, BitState input);

using Oracle = std::function<BitState(const BitState&)>;

struct VerifyFailure {
  BitState input;
  BitState expected;
  BitState actual;
};

struct VerifyReport {
  // At most this many failures / violations are stored; the counts are exact.
  static constexpr std::size_t kMaxRecorded = 16;

  std::uint64_t total_cases = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t ancilla_violation_count = 0;
  std::vector<VerifyFailure> failures;
  std::vector<BitState> ancilla_violations;
  std::optional<std::uint64_t> seed;

  bool passed() const { return failures.empty() && ancilla_violations.empty(); }
};

// Wires that are neither ancilla nor labeled as scratch.
WireList input_wires(const Circuit& circuit);

// Largest free-wire set verify_exhaustive accepts.
inline constexpr std::size_t kExhaustiveCap = 24;

// Enumerates every assignment of `free_wires` (all other wires held at 0),
// runs the circuit, and compares every non-ancilla, non-scratch wire with the
// oracle. Every ancilla must return to 0. Throws SimulationError above the cap.
VerifyReport verify_exhaustive(const Circuit& circuit, const Oracle& oracle,
                               std::span<const WireId> free_wires);

// Same checks on `trials` inputs drawn from SplitMix64(seed): each trial takes
// ceil(|free_wires| / 64) words, bit i of the concatenation driving free_wires[i].
VerifyReport verify_random(const Circuit& circuit, const Oracle& oracle,
                           std::span<const WireId> free_wires, std::uint64_t trials,
                           std::uint64_t seed);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace qadd
