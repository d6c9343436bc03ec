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


#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qadd/blocked_adder.hpp"
#include "qadd/circuit.hpp"
#include "qadd/estimator.hpp"
#include "qadd/fanout_tree.hpp"
#include "qadd/netlist.hpp"
#include "qadd/oracles.hpp"
#include "qadd/ripple_adder.hpp"
#include "qadd/simulator.hpp"

namespace qadd::cli {

namespace {

// Free wires at or below this count are enumerated by default.
constexpr std::size_t kDefaultExhaustiveLimit = 20;
constexpr std::uint64_t kDefaultTrials = 1000;
constexpr std::uint64_t kDefaultSeed = 42;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::int64_t n = 0, d = 0, t = 0, f = 0, e = 0;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = kDefaultTrials;
  bool exhaustive = false;
  bool json = false;
  std::string output;
  std::string file;
  std::string target;
  std::string adder;
  std::vector<std::string> consts;
};

struct Given {
  const CLI::App* app;
  bool operator()(const std::string& name) const {
    const CLI::Option* opt = app->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  }
};

void forbid(const Given& given, std::initializer_list<const char*> names, const std::string& context) {
  for (const char* name : names) {
    if (given(name)) throw UsageError(std::string(name) + " is not valid " + context);
  }
}

void require(const Given& given, std::initializer_list<const char*> names, const std::string& context) {
  for (const char* name : names) {
    if (!given(name)) throw UsageError(std::string(name) + " is required " + context);
  }
}

std::size_t positive(std::int64_t v, const char* name) {
  if (v <= 0) throw UsageError(std::string(name) + " must be positive");
  return static_cast<std::size_t>(v);
}

Circuit synthesize(const Options& o, const Given& given) {
  const std::string ctx = "for --kind " + o.kind;
  if (o.kind == "ripple") {
    require(given, {"--n"}, ctx);
    forbid(given, {"--d", "--t", "--f"}, ctx);
    return synth_ripple(positive(o.n, "--n"));
  }
  if (o.kind == "combined") {
    require(given, {"--n", "--d"}, ctx);
    forbid(given, {"--t", "--f"}, ctx);
    return synth_combined(BlockParams::make(positive(o.n, "--n"), positive(o.d, "--d")));
  }
  require(given, {"--t", "--f"}, ctx);
  forbid(given, {"--n", "--d"}, ctx);
  return synth_fanout_tree(positive(o.t, "--t"), positive(o.f, "--f"));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Circuit load(const Options& o, const Given& given) {
  if (!o.file.empty()) {
    if (given("--kind")) throw UsageError("give either FILE or --kind, not both");
    forbid(given, {"--n", "--d", "--t", "--f"}, "with FILE");
    try {
      return parse_netlist(read_file(o.file));
    } catch (const ParseError& e) {
      throw UsageError(o.file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                       ": " + e.reason());
    }
  }
  if (!given("--kind")) throw UsageError("one of FILE or --kind is required");
  return synthesize(o, given);
}

// Writes to the -o file when given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + o.output);
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string stats_text(const CircuitStats& s) {
  std::ostringstream ss;
  const nlohmann::json j = to_json(s);
  for (const char* key : {"depth", "toffoli_depth", "size", "count_not", "count_cnot",
                          "count_toffoli", "count_fanout", "count_gen_toffoli", "ancilla_count",
                          "max_fanout_length"}) {
    ss << key << ": " << j.at(key).get<std::int64_t>() << "\n";
  }
  return ss.str();
}

// Width n when the circuit is laid out as an ancilla-free ripple adder:
// 2n+1 wires labeled a0.., b0.., z and no ancilla.
std::optional<std::size_t> ripple_width(const Circuit& c) {
  const WireList a = c.roles().indexed("a");
  const WireList b = c.roles().indexed("b");
  if (a.empty() || a.size() != b.size() || !c.roles().find("z") || !c.ancilla().empty()) {
    return std::nullopt;
  }
  if (c.wire_count() != 2 * a.size() + 1) return std::nullopt;
  return a.size();
}

Oracle oracle_for(const Circuit& c) {
  if (c.roles().find("src")) return fanout_oracle(c);
  if (c.roles().find("z")) return adder_oracle(c);
  throw UsageError("circuit carries neither adder roles (a0.., b0.., z) nor fan-out roles (src, x0..)");
}

int cmd_synth(const Options& o, const Given& given, std::ostream& out) {
  forbid(given, {"--seed", "--trials", "--exhaustive"}, "for synth");
  if (!given("--kind")) throw UsageError("--kind is required for synth");
  const Circuit c = synthesize(o, given);
  if (o.json) {
    const nlohmann::json j = {{"kind", o.kind}, {"stats", to_json(compute_stats(c))},
                              {"netlist", export_netlist(c)}};
    emit(o, out, j.dump(2) + "\n");
  } else {
    emit(o, out, export_netlist(c));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, const Given& given, std::ostream& out) {
  const Circuit c = load(o, given);
  const Oracle oracle = oracle_for(c);
  const WireList free = input_wires(c);
  const bool random_flags = given("--trials") || given("--seed");
  if (o.exhaustive && random_flags) throw UsageError("--exhaustive excludes --trials and --seed");
  if (given("--trials") && o.trials == 0) throw UsageError("--trials must be positive");
  const bool exhaustive =
      o.exhaustive || (!random_flags && free.size() <= kDefaultExhaustiveLimit);
  if (exhaustive && free.size() > kExhaustiveCap) {
    throw UsageError("exhaustive verification is capped at " + std::to_string(kExhaustiveCap) +
                     " free wires; this circuit has " + std::to_string(free.size()));
  }
  const VerifyReport r = exhaustive ? verify_exhaustive(c, oracle, free)
                                    : verify_random(c, oracle, free, o.trials, o.seed);
  if (o.json) {
    emit(o, out, to_json(r).dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "result: " << (r.passed() ? "pass" : "FAIL") << "\n"
       << "mode: " << (exhaustive ? "exhaustive" : "random") << "\n"
       << "free_wires: " << free.size() << "\n"
       << "total_cases: " << r.total_cases << "\n"
       << "failures: " << r.failure_count << "\n"
       << "ancilla_violations: " << r.ancilla_violation_count << "\n"
       << "seed: " << (r.seed ? std::to_string(*r.seed) : "none") << "\n";
    for (const auto& f : r.failures) {
      ss << "failure input=" << f.input.to_string() << " expected=" << f.expected.to_string()
         << " actual=" << f.actual.to_string() << "\n";
    }
    for (const auto& s : r.ancilla_violations) ss << "ancilla_violation input=" << s.to_string() << "\n";
    emit(o, out, ss.str());
  }
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_stats(const Options& o, const Given& given, std::ostream& out, std::ostream& err) {
  forbid(given, {"--seed", "--trials", "--exhaustive"}, "for stats");
  const Circuit c = load(o, given);
  const CircuitStats s = compute_stats(c);
  emit(o, out, o.json ? to_json(s).dump(2) + "\n" : stats_text(s));

  const auto n = ripple_width(c);
  if (n && *n >= 3) {
    const auto w = static_cast<std::int64_t>(*n);
    const std::uint32_t span = max_window_span(c, interleaved_layout(c));
    const bool ok = s.depth == 5 * w - 3 && s.size == 7 * w - 6 && s.count_cnot == 5 * w - 5 &&
                    s.count_toffoli == 2 * w - 1 && s.ancilla_count == 0 && span <= 3;
    if (!ok) {
      err << "ripple closed forms violated for n=" << w << ": expected depth " << 5 * w - 3
          << ", size " << 7 * w - 6 << ", cnot " << 5 * w - 5 << ", toffoli " << 2 * w - 1
          << ", span <= 3; got span " << span << "\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

int cmd_estimate(const Options& o, const Given& given, std::ostream& out) {
  forbid(given, {"--kind", "--t", "--seed", "--trials", "--exhaustive"}, "for estimate");
  if (!given("--target")) throw UsageError("--target is required for estimate");
  require(given, {"--n"}, "for estimate");

  ConstantPack consts;
  for (const std::string& kv : o.consts) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--const expects name=value, got '" + kv + "'");
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
    } catch (const std::logic_error&) {
      throw UsageError("--const value is not a number: '" + kv + "'");
    }
    consts.set(kv.substr(0, eq), value);
  }

  CostEstimate est;
  if (o.target == "adder-fanout") {
    forbid(given, {"--adder", "--d"}, "for --target adder-fanout");
    require(given, {"--e", "--f"}, "for --target adder-fanout");
    est = fanout_adder_cost(o.n, o.e, o.f, consts);
  } else {
    require(given, {"--adder"}, "for --target shor-dlog");
    const std::string ctx = "for --adder " + o.adder;
    AdderChoice choice;
    if (o.adder == "ripple") {
      forbid(given, {"--d", "--e", "--f"}, ctx);
      choice = RippleChoice{};
    } else if (o.adder == "combined") {
      require(given, {"--d"}, ctx);
      forbid(given, {"--e", "--f"}, ctx);
      choice = CombinedChoice{o.d};
    } else {
      require(given, {"--e", "--f"}, ctx);
      forbid(given, {"--d"}, ctx);
      choice = FanoutChoice{o.e, o.f};
    }
    est = shor_dlog_estimate(o.n, choice, consts);
  }

  if (o.json) {
    emit(o, out, to_json(est).dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "formula: " << est.formula_id << "\n";
    for (const auto& [k, v] : est.inputs) ss << "input " << k << ": " << number(v) << "\n";
    ss << "qubits_total: " << number(est.qubits_total) << "\n"
       << "ancilla: " << number(est.ancilla) << "\n"
       << "depth: " << number(est.depth) << "\n"
       << "size: " << number(est.size) << "\n";
    for (const auto& [k, v] : est.constants.as_map()) ss << "const " << k << ": " << number(v) << "\n";
    emit(o, out, ss.str());
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Machine-readable JSON output");
  sub->add_option("-o", o.output, "Write output to FILE instead of stdout");
}

void add_kind(CLI::App* sub, Options& o) {
  sub->add_option("--kind", o.kind, "Circuit family")
      ->check(CLI::IsMember({"ripple", "combined", "fanout-tree"}));
  sub->add_option("--n", o.n, "Operand width");
  sub->add_option("--d", o.d, "Depth parameter d(n) of the blocked adder");
  sub->add_option("--t", o.t, "Fan-out target count");
  sub->add_option("--f", o.f, "Maximum fan-out length");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Synthesis, verification and resource estimation of reversible adders", "qadd"};
  app.require_subcommand(1, 1);

  auto* synth = app.add_subcommand("synth", "Synthesize a circuit and write its netlist");
  add_kind(synth, o);
  add_common(synth, o);

  auto* verify = app.add_subcommand("verify", "Simulate a circuit against its arithmetic oracle");
  add_kind(verify, o);
  verify->add_option("file", o.file, "Netlist to verify instead of --kind")->check(CLI::ExistingFile);
  verify->add_option("--seed", o.seed, "Seed of the splitmix64 input stream");
  verify->add_option("--trials", o.trials, "Number of random trials");
  verify->add_flag("--exhaustive", o.exhaustive, "Enumerate every input assignment");
  add_common(verify, o);

  auto* stats = app.add_subcommand("stats", "Print depth, size and gate counts");
  add_kind(stats, o);
  stats->add_option("file", o.file, "Netlist to analyse instead of --kind")->check(CLI::ExistingFile);
  add_common(stats, o);

  auto* estimate = app.add_subcommand("estimate", "Evaluate closed-form resource estimates");
  estimate->add_option("--target", o.target, "Estimate target")
      ->check(CLI::IsMember({"adder-fanout", "shor-dlog"}));
  estimate->add_option("--adder", o.adder, "Adder used inside the discrete-log circuit")
      ->check(CLI::IsMember({"ripple", "combined", "fanout"}));
  estimate->add_option("--n", o.n, "Problem size in bits");
  estimate->add_option("--d", o.d, "Depth parameter of the blocked adder");
  estimate->add_option("--e", o.e, "Depth parameter of the fan-out adder");
  estimate->add_option("--f", o.f, "Maximum fan-out length");
  estimate->add_option("--const", o.consts, "Override a constant, name=value (repeatable)");
  add_common(estimate, o);

  CLI::App* active = nullptr;
  try {
    app.parse(argc, argv);
    for (CLI::App* sub : {synth, verify, stats, estimate}) {
      if (sub->parsed()) active = sub;
    }
    const Given given{active};
    if (active == synth) return cmd_synth(o, given, out);
    if (active == verify) return cmd_verify(o, given, out);
    if (active == stats) return cmd_stats(o, given, out, err);
    return cmd_estimate(o, given, out);
  } catch (const CLI::CallForHelp&) {
    out << (active ? active->help() : app.help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* shown = &app;
    for (CLI::App* sub : {synth, verify, stats, estimate}) {
      if (sub->parsed()) shown = sub;
    }
    err << shown->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const CircuitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EstimateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qadd::cli
