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


#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qadd/blocked_adder.hpp"
#include "qadd/fanout_tree.hpp"
#include "qadd/netlist.hpp"
#include "qadd/ripple_adder.hpp"

namespace qadd {
namespace {

WireId w(std::uint32_t i) { return WireId(i); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text, const std::string& prefix_not) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.starts_with(prefix_not)) ++n;
  }
  return n;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_netlist(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseError(0, 0, "none");
}

TEST(ExportTest, EmptyCircuitIsHeaderOnly) {
  EXPECT_EQ(export_netlist(Circuit(2)), "qadd 1\nqubits 2\nancilla\n");
}

TEST(ExportTest, SingleCnot) {
  Circuit c(2);
  c.append(Gate::cnot(w(0), w(1)));
  EXPECT_EQ(export_netlist(c), "qadd 1\nqubits 2\nancilla\ncx 0 1\n");
}

TEST(ExportTest, AllOpcodesAndAncilla) {
  Circuit c(6, {5, 4});
  c.roles().set(w(0), "src");
  c.append(Gate::not_gate(w(1)));
  c.append(Gate::toffoli(w(0), w(1), w(2)));
  c.append(Gate::fanout(w(0), {w(1), w(2), w(3)}));
  c.append(Gate::gen_toffoli({w(3), w(2), w(1)}, w(0)));
  EXPECT_EQ(export_netlist(c),
            "qadd 1\nqubits 6\nancilla 4 5\n# role 0 src\nx 1\nccx 0 1 2\nfo 0 1 2 3\ntg 3 2 1 0\n");
}

TEST(ExportTest, NoTrailingWhitespace) {
  const std::string text = export_netlist(synth_combined(BlockParams::make(16, 4)));
  EXPECT_EQ(text.find(" \n"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(GoldenTest, RippleThreeIsByteStable) {
  const std::string golden = slurp(std::string(QADD_GOLDEN_DIR) + "/ripple_n3.qn");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(export_netlist(synth_ripple(3)), golden);
  EXPECT_EQ(count_lines(golden, "#") - 3, 15u);
}

TEST(RoundTripTest, EveryKind) {
  const std::vector<Circuit> circuits = {
      synth_ripple(1),        synth_ripple(5),         synth_ripple(64),
      synth_combined(BlockParams::make(8, 2)),         synth_combined(BlockParams::make(64, 8)),
      synth_fanout_tree(1, 1), synth_fanout_tree(37, 4), synth_init(5),
      synth_sum(4, true),     synth_carry(16, 2)};
  for (const Circuit& c : circuits) {
    const std::string text = export_netlist(c);
    const Circuit back = parse_netlist(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(export_netlist(back), text);
  }
}

TEST(RoundTripTest, RippleFiveStatsPreserved) {
  const auto s = compute_stats(parse_netlist(export_netlist(synth_ripple(5))));
  EXPECT_EQ(s.depth, 22);
  EXPECT_EQ(s.size, 29);
}

TEST(ParseTest, DuplicateOperand) {
  const ParseError e = parse_error("qadd 1\nqubits 2\nancilla\nccx 0 0 1\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 1u);
}

TEST(ParseTest, OutOfRange) {
  const ParseError e = parse_error("qadd 1\nqubits 2\nancilla\ncx 0 5\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 6u);
  EXPECT_NE(e.reason().find("out of range"), std::string::npos);
}

TEST(ParseTest, UnknownOpcode) {
  const ParseError e = parse_error("qadd 1\nqubits 3\nancilla\ncx 0 1\n  swap 0 1\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 3u);
}

TEST(ParseTest, HeaderErrors) {
  EXPECT_EQ(parse_error("").reason(), "missing header");
  EXPECT_EQ(parse_error("qadd 2\n").line(), 1u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 0\n").line(), 2u);
  EXPECT_EQ(parse_error("qadd 1\nqubits x\n").column(), 8u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 2\nancilla 2\n").line(), 3u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 2\ncx 0 1\n").line(), 3u);
  EXPECT_EQ(parse_error("qadd 1\n# role 0 a0\nqubits 2\nancilla\n").line(), 2u);
}

TEST(ParseTest, ArityErrors) {
  EXPECT_EQ(parse_error("qadd 1\nqubits 3\nancilla\ncx 0\n").line(), 4u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 3\nancilla\nccx 0 1\n").line(), 4u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 3\nancilla\nfo 0\n").line(), 4u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 3\nancilla\ntg 0\n").line(), 4u);
  EXPECT_EQ(parse_error("qadd 1\nqubits 3\nancilla\nx 1 2\n").line(), 4u);
}

TEST(ParseTest, DuplicateRoleLabel) {
  const ParseError e = parse_error("qadd 1\nqubits 3\nancilla\n# role 0 z\n# role 1 z\n");
  EXPECT_EQ(e.line(), 5u);
}

TEST(ParseTest, ToleratesBlankLinesCommentsAndCrlf) {
  const Circuit c = parse_netlist("qadd 1\r\nqubits 2\r\n\nancilla 1\n# note\ncx 0 1\n");
  EXPECT_EQ(c.wire_count(), 2u);
  EXPECT_TRUE(c.is_ancilla(w(1)));
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::cnot(w(0), w(1)));
}

TEST(StatsJsonTest, MirrorsFieldNames) {
  const auto j = to_json(compute_stats(synth_ripple(5)));
  EXPECT_EQ(j.size(), 10u);
  EXPECT_EQ(j["depth"], 22);
  EXPECT_EQ(j["size"], 29);
  EXPECT_EQ(j["count_cnot"], 20);
  EXPECT_EQ(j["count_toffoli"], 9);
  EXPECT_EQ(j["ancilla_count"], 0);
}

}  // namespace
}  // namespace qadd
