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

// Block-structured adders: ripple blocks glued by a carry-lookahead tree.
//
// Notation: for a bit range [i, j), p[i,j] is 1 when a carry entering at i
// propagates to j, g[i,j] is 1 when the range produces a carry at j, and
// g[0,j] = c_j is the ordinary carry. Ranges combine as
//   p[i,j] = p[i,t] p[t,j],   g[i,j] = g[i,t] p[t,j] ^ g[t,j].

#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "qadd/circuit.hpp"

namespace qadd {

struct BlockParams {
  std::size_t n = 0;  // operand width, a power of two
  std::size_t d = 0;  // target depth parameter d(n) evaluated at n
  std::size_t k = 0;  // block width 2^floor(log2 d)
  std::size_t l = 0;  // floor(log2 d) + 1, so k = 2^(l-1)

  std::size_t blocks() const { return n / k; }

  // Throws CircuitError unless n is a power of two, d >= 2 and n/k >= 4.
  static BlockParams make(std::size_t n, std::size_t d);
};

// Dirty-ancilla ladder, first half only. `controls` hold x_0..x_{w-1};
// `dirty` holds A_0..A_{w-1} with arbitrary contents. Leaves
//   target ^= x_0 x_1 ... x_{w-1},   A_i ^= x_0 ... x_{i-1} (1 <= i < w),
// and A_0 untouched. 2(w-1) Toffolis plus one CNOT on the bottom rung.
// Throws CircuitError for w < 2 or mismatched spans.
GateList barenco_first_half(std::span<const WireId> controls, std::span<const WireId> dirty,
                            WireId target);

// INIT_w on (b, a) with zeroed g and p:
//   B_i <- p[i,i+1], A_0 <- a_0, A_i <- a_i ^ g[0,i] ^ p[0,i],
//   g <- g[0,w], p <- p[0,w].
// 3w-2 Toffolis. Throws CircuitError for w < 2.
GateList init_gates(std::span<const WireId> a, std::span<const WireId> b, WireId g, WireId p);

// SUM_w: B_j <- a_j ^ b_j ^ d_j with d_0 = carry_in (0 when absent) and
// d_j = MAJ(a_{j-1}, b_{j-1}, d_{j-1}). A and the carry-in are preserved.
// 2w-2 Toffolis.
GateList sum_gates(std::span<const WireId> a, std::span<const WireId> b,
                   std::optional<WireId> carry_in);

// Number of scratch wires the carry tree needs for m leaves:
// sum over t = 1 .. log2(m)-1 of (m/2^t - 1).
std::size_t carry_scratch_count(std::size_t m);

// In-place carry-lookahead tree over m = g.size() leaves (m a power of two,
// m >= 4). `p[x]` holds p of leaf x (p[0] is never read); `g[x]` holds g of
// leaf x and ends holding g over leaves 0..x. `scratch` must be zero and is
// returned to zero. g[m-1] is only ever a target, so any value already XORed
// into it passes through unchanged.
//
// With include_top = false every gate that reads p[m-1] or writes g[m-1] is
// left out; the other outputs are unaffected.
GateList carry_tree_gates(std::span<const WireId> p, std::span<const WireId> g,
                          std::span<const WireId> scratch, bool include_top = true);

// INIT_w standalone: b_i = 2i, a_i = 2i+1, g = 2w, p = 2w+1 (ancilla).
Circuit synth_init(std::size_t w);

// SUM_w standalone: b_i = 2i, a_i = 2i+1 and, when flagged, carry-in c = 2w.
Circuit synth_sum(std::size_t w, bool with_carry_in);

// CARRY_l over m = n / 2^(l-1) leaves: wires p1..p(m-1), then g0..g(m-1),
// then the scratch ancilla. Throws CircuitError unless n is a power of two
// and m >= 4.
Circuit synth_carry(std::size_t n, std::size_t l);

// The blocked ADD_n. Wires: the interleaved adder (b_i = 2i, a_i = 2i+1,
// z = 2n), then carry slots g0..g(m-2), block propagates p0..p(m-1) and the
// carry-tree scratch, all ancilla. The top block's generate lives on z.
Circuit synth_combined(const BlockParams& params);

}  // namespace qadd
