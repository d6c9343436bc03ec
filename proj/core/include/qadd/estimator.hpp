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

// Closed-form resource estimates. Asymptotic bounds are reified with named
// multiplicative constants that default to 1; the estimates describe formula
// shape, not calibrated gate counts.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

namespace qadd {

class EstimateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstantPack {
  double c_depth = 1.0;
  double c_size = 1.0;
  double c_anc = 1.0;
  double c_logstar = 1.0;

  // Overrides one constant by name; throws EstimateError for an unknown name
  // or a non-positive value.
  void set(const std::string& name, double value);
  std::map<std::string, double> as_map() const;
};

struct CostEstimate {
  std::string formula_id;
  std::map<std::string, double> inputs;
  double qubits_total = 0;
  double ancilla = 0;
  double depth = 0;
  double size = 0;
  ConstantPack constants;
};

// Slack added to the blocked adder's Toffoli-depth bound 14k + 4 log2(n/k).
// Measured once across the verified (n, d) grid (worst case 11 below the
// slack-free bound) and pinned; the acceptance suite re-checks it.
inline constexpr double kCombinedToffoliDepthSlack = 0.0;

// min j such that the j-fold log2 of x is <= 1. Throws EstimateError for x <= 0.
int log_star(double x);
// min j such that the j-fold log_star of x is <= 1.
int log_star_star(double x);

// Generalized Toffoli on t controls built from fan-outs of length f:
// depth c_depth (log t / log f + log* t), size c_size t, ancilla c_anc t.
CostEstimate tt_cost(std::int64_t t, std::int64_t f, const ConstantPack& consts = {});

// Constant-depth carry-lookahead on m-bit inputs with length-f fan-outs:
// ancilla and size m log** m, depth log m / log f + log*(m log** m).
CostEstimate gcla_cost(std::int64_t m, std::int64_t f, const ConstantPack& consts = {});

// Blocked adder with the lookahead replaced by the constant-depth circuit:
// ancilla n log** n / e, depth e, size n. Throws EstimateError if e < log* n.
CostEstimate fanout_adder_cost(std::int64_t n, std::int64_t e, std::int64_t f,
                               const ConstantPack& consts = {});

// Exact counts of the ripple adder (n >= 3): depth 5n-3, size 7n-6, no ancilla.
CostEstimate ripple_adder_cost(std::int64_t n);

// Toffoli-only upper bounds of the blocked adder with k = 2^floor(log2 d):
// ancilla 3n/k, size 14n, depth 14k + 4 log2(n/k) + kCombinedToffoliDepthSlack.
CostEstimate combined_adder_cost(std::int64_t n, std::int64_t d, const ConstantPack& consts = {});

struct RippleChoice {};
struct CombinedChoice {
  std::int64_t d = 0;
};
struct FanoutChoice {
  std::int64_t e = 0;
  std::int64_t f = 0;
};
using AdderChoice = std::variant<RippleChoice, CombinedChoice, FanoutChoice>;

// Elliptic-curve discrete log with in-place adders: qubits 4n + adder
// ancilla, depth c_depth n^2 adder_depth, size c_size n^3.
CostEstimate shor_dlog_estimate(std::int64_t n, const AdderChoice& adder,
                                const ConstantPack& consts = {});

// Baseline qubit count of the same algorithm using an adder that needs n
// ancilla.
inline double shor_dlog_baseline_qubits(std::int64_t n) { return 5.0 * static_cast<double>(n); }

nlohmann::json to_json(const CostEstimate& estimate);

namespace detail {

// Intermediate stages of the generalized Toffoli cost, kept for reference.
// OR of t bits reduced to O(log t) bits: depth log t / log f + 1, size t log t.
CostEstimate tt_reduction_cost(std::int64_t t, std::int64_t f, const ConstantPack& consts);
// Iterating the reduction d times: depth d + log* t + log t / log f +
// d log log t / log f, size d t log^(d) t.
CostEstimate tt_iterated_cost(std::int64_t t, std::int64_t f, std::int64_t d,
                              const ConstantPack& consts);

}  // namespace detail

}  // namespace qadd
