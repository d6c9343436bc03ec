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


#include <random>

#include <gtest/gtest.h>

#include "qadd/fanout_tree.hpp"
#include "qadd/oracles.hpp"
#include "qadd/simulator.hpp"
#include "test_support.hpp"

namespace qadd {
namespace {

WireId w(std::uint32_t i) { return WireId(i); }

// Smallest r with f^r >= t.
std::int64_t ceil_log(std::int64_t t, std::int64_t f) {
  std::int64_t r = 0;
  for (std::int64_t p = 1; p < t; p *= f) ++r;
  return r;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Direct application of a single long fan-out gate.
Oracle single_gate_oracle(std::size_t t) {
  WireList targets;
  for (std::uint32_t i = 1; i <= t; ++i) targets.push_back(w(i));
  const Gate gate = Gate::fanout(w(0), targets);
  return [gate](const BitState& s) {
    BitState out = s;
    apply_gate(out, gate);
    return out;
  };
}

TEST(FanoutTreeTest, ShortFanoutIsOneGate) {
  const Circuit c = synth_fanout_tree(3, 4);
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::kFanout);
  EXPECT_EQ(compute_stats(c).depth, 1);
}

TEST(FanoutTreeTest, UnitLengthIsCnotChain) {
  const Circuit c = synth_fanout_tree(5, 1);
  const auto s = compute_stats(c);
  EXPECT_EQ(s.count_cnot, 5);
  EXPECT_EQ(s.depth, 5);
  const VerifyReport r = verify_exhaustive(c, single_gate_oracle(5), input_wires(c));
  EXPECT_TRUE(r.passed());
}

TEST(FanoutTreeTest, FourTargetsLengthTwo) {
  const Circuit c = synth_fanout_tree(4, 2);
  const VerifyReport r = verify_exhaustive(c, single_gate_oracle(4), input_wires(c));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.total_cases, 32u);
}

TEST(FanoutTreeTest, ExhaustiveSmall) {
  for (std::size_t t = 1; t <= 12; ++t) {
    for (std::size_t f = 1; f <= t + 1; ++f) {
      const Circuit c = synth_fanout_tree(t, f);
      const VerifyReport r = verify_exhaustive(c, single_gate_oracle(t), input_wires(c));
      ASSERT_TRUE(r.passed()) << "t=" << t << " f=" << f;
    }
  }
}

TEST(FanoutTreeTest, BoundsAndLengths) {
  for (std::int64_t t : {1, 2, 3, 5, 8, 13, 31, 64, 100, 1024}) {
    for (std::int64_t f : {2, 3, 4, 8, 16}) {
      const Circuit c = synth_fanout_tree(static_cast<std::size_t>(t), static_cast<std::size_t>(f));
      const auto s = compute_stats(c);
      EXPECT_LE(s.depth, 2 * ceil_log(t, f) + 1) << t << "," << f;
      EXPECT_LE(s.size, 2 * ceil_div(t - 1, f - 1) + 1) << t << "," << f;
      EXPECT_LE(s.max_fanout_length, f);
      EXPECT_EQ(s.ancilla_count, 0);
    }
  }
}

TEST(FanoutTreeTest, RandomEquivalence) {
  for (std::size_t t : {13u, 33u, 64u}) {
    for (std::size_t f : {1u, 2u, 3u, 4u, 8u}) {
      const Circuit c = synth_fanout_tree(t, f);
      const VerifyReport r = verify_random(c, fanout_oracle(c), input_wires(c), 256, t * 17 + f);
      EXPECT_TRUE(r.passed()) << "t=" << t << " f=" << f;
    }
  }
}

TEST(FanoutTreeTest, LongFanoutDepthExample) {
  const Circuit c = synth_fanout_tree(1024, 16);
  EXPECT_LE(compute_stats(c).depth, 7);
  const VerifyReport r = verify_random(c, single_gate_oracle(1024), input_wires(c), 1000, 1);
  EXPECT_TRUE(r.passed());
}

TEST(FanoutTreeTest, SelfInverse) {
  std::mt19937_64 rng(31);
  for (std::size_t t : {7u, 40u}) {
    for (std::size_t f : {1u, 2u, 5u}) {
      Circuit twice = synth_fanout_tree(t, f);
      const GateList once = twice.gates();
      twice.append(once);
      for (int i = 0; i < 50; ++i) {
        const BitState s = testing::random_state(rng, t + 1);
        EXPECT_EQ(run(twice, s), s);
      }
    }
  }
}

TEST(FanoutTreeTest, Errors) {
  EXPECT_THROW(synth_fanout_tree(0, 2), CircuitError);
  EXPECT_THROW(synth_fanout_tree(4, 0), CircuitError);
  const WireList dup = {w(1), w(1)};
  EXPECT_THROW(fanout_tree_gates(w(0), dup, 2), CircuitError);
  const WireList self = {w(0), w(1)};
  EXPECT_THROW(fanout_tree_gates(w(0), self, 2), CircuitError);
}

}  // namespace
}  // namespace qadd
