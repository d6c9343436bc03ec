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

#include "qadd/estimator.hpp"

#include <bit>
#include <algorithm>
#include <cmath>

namespace qadd {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw EstimateError(what);
}

double d(std::int64_t v) { return static_cast<double>(v); }

std::int64_t block_width(std::int64_t d_param) {
  return std::int64_t{1} << (std::bit_width(static_cast<std::uint64_t>(d_param)) - 1);
}

}  // namespace

void ConstantPack::set(const std::string& name, double value) {
  require(value > 0 && std::isfinite(value), "constant '" + name + "' must be positive");
  if (name == "c_depth") {
    c_depth = value;
  } else if (name == "c_size") {
    c_size = value;
  } else if (name == "c_anc") {
    c_anc = value;
  } else if (name == "c_logstar") {
    c_logstar = value;
  } else {
    throw EstimateError("unknown constant '" + name + "'");
  }
}

std::map<std::string, double> ConstantPack::as_map() const {
  return {{"c_anc", c_anc}, {"c_depth", c_depth}, {"c_logstar", c_logstar}, {"c_size", c_size}};
}

int log_star(double x) {
  require(x > 0 && !std::isnan(x), "log* needs a positive argument");
  // Compare against the tower 1, 2, 4, 16, 65536 rather than iterating
  // std::log2, which rounds 16 + ulp down to 16.
  constexpr double kTower[] = {1.0, 2.0, 4.0, 16.0, 65536.0};
  int j = 0;
  for (double t : kTower) {
    if (x <= t) return j;
    ++j;
  }
  return j;  // the next level, 2^65536, exceeds every double
}

int log_star_star(double x) {
  require(x > 0 && !std::isnan(x), "log** needs a positive argument");
  int j = 0;
  while (x > 1.0) {
    x = log_star(x);
    ++j;
  }
  return j;
}

CostEstimate tt_cost(std::int64_t t, std::int64_t f, const ConstantPack& consts) {
  require(t >= 2, "T_t cost needs t >= 2");
  require(f >= 2, "T_t cost needs f >= 2");
  CostEstimate e;
  e.formula_id = "tt_gate";
  e.inputs = {{"t", d(t)}, {"f", d(f)}};
  e.constants = consts;
  e.depth = consts.c_depth * (std::log2(d(t)) / std::log2(d(f)) + consts.c_logstar * log_star(d(t)));
  e.size = consts.c_size * d(t);
  e.ancilla = consts.c_anc * d(t);
  e.qubits_total = d(t) + 1 + e.ancilla;
  return e;
}

CostEstimate gcla_cost(std::int64_t m, std::int64_t f, const ConstantPack& consts) {
  require(m >= 2, "GCLA cost needs m >= 2");
  require(f >= 2, "GCLA cost needs f >= 2");
  const double edges = d(m) * log_star_star(d(m));
  CostEstimate e;
  e.formula_id = "gcla";
  e.inputs = {{"m", d(m)}, {"f", d(f)}};
  e.constants = consts;
  e.ancilla = consts.c_anc * edges;
  e.depth = consts.c_depth *
            (std::log2(d(m)) / std::log2(d(f)) + consts.c_logstar * log_star(edges));
  e.size = consts.c_size * edges;
  e.qubits_total = 2 * d(m) + e.ancilla;
  return e;
}

CostEstimate fanout_adder_cost(std::int64_t n, std::int64_t e_param, std::int64_t f,
                               const ConstantPack& consts) {
  require(n >= 4, "fan-out adder cost needs n >= 4");
  require(f >= 2, "fan-out adder cost needs f >= 2");
  require(e_param >= log_star(d(n)), "fan-out adder cost needs e >= log* n");
  CostEstimate e;
  e.formula_id = "fanout_adder";
  e.inputs = {{"n", d(n)}, {"e", d(e_param)}, {"f", d(f)}, {"k", d(block_width(e_param))}};
  e.constants = consts;
  e.ancilla = consts.c_anc * d(n) * log_star_star(d(n)) / d(e_param);
  e.depth = consts.c_depth * d(e_param);
  e.size = consts.c_size * d(n);
  e.qubits_total = 2 * d(n) + 1 + e.ancilla;
  return e;
}

CostEstimate ripple_adder_cost(std::int64_t n) {
  require(n >= 3, "ripple closed forms hold for n >= 3");
  CostEstimate e;
  e.formula_id = "ripple_adder";
  e.inputs = {{"n", d(n)}};
  e.ancilla = 0;
  e.depth = 5 * d(n) - 3;
  e.size = 7 * d(n) - 6;
  e.qubits_total = 2 * d(n) + 1;
  return e;
}

CostEstimate combined_adder_cost(std::int64_t n, std::int64_t d_param, const ConstantPack& consts) {
  require(n >= 4 && std::has_single_bit(static_cast<std::uint64_t>(n)),
          "blocked adder cost needs n a power of two");
  require(d_param >= 2, "blocked adder cost needs d >= 2");
  const std::int64_t k = block_width(d_param);
  require(n / k >= 4, "blocked adder cost needs n/k >= 4");
  CostEstimate e;
  e.formula_id = "combined_adder";
  e.inputs = {{"n", d(n)}, {"d", d(d_param)}, {"k", d(k)}};
  e.constants = consts;
  e.ancilla = consts.c_anc * 3 * d(n) / d(k);
  e.depth = consts.c_depth *
            (14 * d(k) + 4 * std::log2(d(n) / d(k)) + kCombinedToffoliDepthSlack);
  e.size = consts.c_size * 14 * d(n);
  e.qubits_total = 2 * d(n) + 1 + e.ancilla;
  return e;
}

CostEstimate shor_dlog_estimate(std::int64_t n, const AdderChoice& adder,
                                const ConstantPack& consts) {
  require(n >= 4, "discrete-log estimate needs n >= 4");
  CostEstimate adder_cost;
  CostEstimate e;
  e.inputs = {{"n", d(n)}};
  if (std::holds_alternative<RippleChoice>(adder)) {
    adder_cost = ripple_adder_cost(n);
    e.formula_id = "shor_dlog/ripple";
  } else if (const auto* c = std::get_if<CombinedChoice>(&adder)) {
    adder_cost = combined_adder_cost(n, c->d, consts);
    e.formula_id = "shor_dlog/combined";
    e.inputs["d"] = d(c->d);
  } else {
    const auto& f = std::get<FanoutChoice>(adder);
    adder_cost = fanout_adder_cost(n, f.e, f.f, consts);
    e.formula_id = "shor_dlog/fanout";
    e.inputs["e"] = d(f.e);
    e.inputs["f"] = d(f.f);
  }
  e.constants = consts;
  e.ancilla = adder_cost.ancilla;
  e.qubits_total = 4 * d(n) + adder_cost.ancilla;
  // adder_cost.depth already carries c_depth.
  e.depth = d(n) * d(n) * adder_cost.depth;
  e.size = consts.c_size * d(n) * d(n) * d(n);
  return e;
}

nlohmann::json to_json(const CostEstimate& estimate) {
  nlohmann::json j;
  j["formula_id"] = estimate.formula_id;
  j["inputs"] = estimate.inputs;
  j["qubits_total"] = estimate.qubits_total;
  j["ancilla"] = estimate.ancilla;
  j["depth"] = estimate.depth;
  j["size"] = estimate.size;
  j["constants"] = estimate.constants.as_map();
  return j;
}

namespace detail {

CostEstimate tt_reduction_cost(std::int64_t t, std::int64_t f, const ConstantPack& consts) {
  require(t >= 2 && f >= 2, "T_t reduction cost needs t, f >= 2");
  const double lg = std::log2(d(t));
  CostEstimate e;
  e.formula_id = "tt_reduction";
  e.inputs = {{"t", d(t)}, {"f", d(f)}};
  e.constants = consts;
  e.depth = consts.c_depth * (lg / std::log2(d(f)) + 1);
  e.size = consts.c_size * d(t) * lg;
  e.ancilla = consts.c_anc * d(t) * lg;
  e.qubits_total = d(t) + 1 + e.ancilla;
  return e;
}

CostEstimate tt_iterated_cost(std::int64_t t, std::int64_t f, std::int64_t rounds,
                              const ConstantPack& consts) {
  require(t >= 2 && f >= 2 && rounds >= 1, "T_t iterated cost needs t, f >= 2 and rounds >= 1");
  double iterated = d(t);
  for (std::int64_t i = 0; i < rounds && iterated > 1; ++i) iterated = std::log2(iterated);
  const double lf = std::log2(d(f));
  const double lg = std::log2(d(t));
  CostEstimate e;
  e.formula_id = "tt_iterated";
  e.inputs = {{"t", d(t)}, {"f", d(f)}, {"d", d(rounds)}};
  e.constants = consts;
  e.depth = consts.c_depth * (d(rounds) + consts.c_logstar * log_star(d(t)) + lg / lf +
                              d(rounds) * std::log2(std::max(lg, 1.0)) / lf);
  e.size = consts.c_size * d(rounds) * d(t) * std::max(iterated, 1.0);
  e.ancilla = consts.c_anc * d(rounds) * d(t) * std::max(iterated, 1.0);
  e.qubits_total = d(t) + 1 + e.ancilla;
  return e;
}

}  // namespace detail

}  // namespace qadd
