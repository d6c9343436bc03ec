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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace qadd {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qadd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("qadd_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, SynthThenStats) {
  const std::string path = temp_path("add5.qn");
  ASSERT_EQ(invoke({"synth", "--kind", "ripple", "--n", "5", "-o", path}).code, 0);
  const Result r = invoke({"stats", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["depth"], 22);
  EXPECT_EQ(j["size"], 29);
  std::filesystem::remove(path);
}

TEST(CliTest, StatsFlagsTamperedRipple) {
  const std::string path = temp_path("bad.qn");
  ASSERT_EQ(invoke({"synth", "--kind", "ripple", "--n", "4", "-o", path}).code, 0);
  std::string text = slurp(path);
  text += "cx 0 1\ncx 0 1\n";
  std::ofstream(path, std::ios::binary) << text;
  const Result r = invoke({"stats", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("closed forms"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliTest, VerifyCombinedExhaustive) {
  const Result r = invoke({"verify", "--kind", "combined", "--n", "8", "--d", "2", "--exhaustive"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
  EXPECT_NE(r.out.find("total_cases: 131072"), std::string::npos);
}

TEST(CliTest, VerifyDefaultsToRandomAboveTwentyFreeWires) {
  const Result r = invoke({"verify", "--kind", "ripple", "--n", "10", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total_cases"], 1000);
  EXPECT_EQ(j["seed"], 42);
  const Result small = invoke({"verify", "--kind", "ripple", "--n", "9", "--json"});
  EXPECT_EQ(nlohmann::json::parse(small.out)["total_cases"], 1 << 19);
}

TEST(CliTest, VerifyFileDetectsBrokenCircuit) {
  const std::string path = temp_path("broken.qn");
  ASSERT_EQ(invoke({"synth", "--kind", "ripple", "--n", "3", "-o", path}).code, 0);
  std::string text = slurp(path);
  text.erase(text.find("ccx 0 1 3\n"), 10);
  std::ofstream(path, std::ios::binary) << text;
  const Result r = invoke({"verify", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliTest, VerifyFanoutTree) {
  EXPECT_EQ(invoke({"verify", "--kind", "fanout-tree", "--t", "64", "--f", "4", "--trials", "256"}).code, 0);
}

TEST(CliTest, EstimateShorRipple) {
  const Result r = invoke({"estimate", "--target", "shor-dlog", "--n", "256", "--adder", "ripple", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["qubits_total"], 1024.0);
  EXPECT_EQ(j["formula_id"], "shor_dlog/ripple");
}

TEST(CliTest, EstimateConstOverride) {
  const Result r = invoke({"estimate", "--target", "adder-fanout", "--n", "65536", "--e", "4", "--f",
                           "2", "--const", "c_depth=3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["depth"], 12.0);
  EXPECT_EQ(j["constants"]["c_depth"], 3.0);
}

TEST(CliTest, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"synth"},
      {"synth", "--kind", "ripple"},
      {"synth", "--kind", "ripple", "--n", "4", "--t", "3"},
      {"synth", "--kind", "combined", "--n", "12", "--d", "2"},
      {"synth", "--kind", "teleport", "--n", "4"},
      {"synth", "--kind", "fanout-tree", "--t", "4"},
      {"synth", "--kind", "ripple", "--n", "0"},
      {"verify", "--kind", "ripple", "--n", "13", "--exhaustive"},
      {"verify", "--kind", "ripple", "--n", "3", "--exhaustive", "--seed", "1"},
      {"verify", "/nonexistent/file.qn"},
      {"estimate", "--n", "256"},
      {"estimate", "--target", "shor-dlog", "--n", "256"},
      {"estimate", "--target", "shor-dlog", "--n", "256", "--adder", "combined"},
      {"estimate", "--target", "shor-dlog", "--n", "256", "--adder", "ripple", "--d", "4"},
      {"estimate", "--target", "adder-fanout", "--n", "1024", "--e", "1", "--f", "2"},
      {"estimate", "--target", "adder-fanout", "--n", "1024", "--e", "4", "--f", "2", "--const", "c_x=1"},
      {"estimate", "--target", "adder-fanout", "--n", "1024", "--e", "4", "--f", "2", "--const", "c_depth"},
      {"stats", "--n", "3"},
  };
  for (const auto& args : bad) {
    const Result r = invoke(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, 2) << joined << "\n" << r.err;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(CliTest, MalformedNetlistExitsTwoWithPosition) {
  const std::string path = temp_path("malformed.qn");
  std::ofstream(path, std::ios::binary) << "qadd 1\nqubits 2\nancilla\ncx 0 5\n";
  const Result r = invoke({"stats", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":4:6:"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(CliTest, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--help"}).code, 0);
}

TEST(CliTest, RepeatedInvocationsAreIdentical) {
  const std::vector<std::string> args = {"verify", "--kind", "combined", "--n", "32", "--d", "5",
                                         "--seed", "9", "--trials", "300", "--json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliBinaryTest, ProcessExitCodes) {
  const std::string cli = QADD_CLI_PATH;
  EXPECT_EQ(std::system((cli + " verify --kind ripple --n 4 > /dev/null").c_str()), 0);
  const int status = std::system((cli + " synth > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace qadd
