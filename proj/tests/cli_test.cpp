// Copyright 2026 The easlab Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "easlab/cli.hpp"

namespace easlab::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

std::string data(const std::string& name) { return std::string(EASLAB_TEST_DATA_DIR) + "/" + name; }

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VerifyCedsFile) {
  const Result r = invoke({"verify", data("f4.json"), "--kind", "ceds", "--json"});
  EXPECT_EQ(r.code, kHolds) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("report").at("holds").get<bool>());
}

TEST(Cli, VerifyReportsFailuresAndBadInput) {
  EXPECT_EQ(invoke({"verify", data("not_eas.json")}).code, kFails);
  EXPECT_EQ(invoke({"verify", data("malformed.json")}).code, kInputError);
  EXPECT_EQ(invoke({"verify", data("truncated.json")}).code, kInputError);
  EXPECT_EQ(invoke({"verify", data("missing.json")}).code, kInputError);
  EXPECT_EQ(invoke({"verify", data("f4.json"), "--kind", "nonsense"}).code, kInputError);
  EXPECT_EQ(invoke({"verify", data("not_eas.json"), "--kind", "ceds"}).code, kFails);
  EXPECT_EQ(invoke({"verify", data("m17.json"), "--kind", "leas"}).code, kHolds);
  EXPECT_EQ(invoke({"verify", data("f4.json"), "--kind", "leas"}).code, kHolds);
  EXPECT_EQ(invoke({"verify", data("s3.json"), "--kind", "group"}).code, kHolds);
}

TEST(Cli, ClassifySizeTwo) {
  const Result r = invoke({"classify", "--size", "2", "--json"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 13u);
  const Result table = invoke({"classify", "--size", "2"});
  EXPECT_NE(table.out.find("H2"), std::string::npos);
}

TEST(Cli, ClassifyIsIndependentOfJobs) {
  const Result one = invoke({"classify", "--size", "3", "--nondegenerate", "--json", "--jobs", "1"});
  const Result three = invoke({"classify", "--size", "3", "--nondegenerate", "--json", "--jobs", "3"});
  ASSERT_EQ(one.code, kHolds);
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(nlohmann::json::parse(one.out).size(), 3u);
}

TEST(Cli, ClassifyGuardsLargeSizes) {
  EXPECT_EQ(invoke({"classify", "--size", "4"}).code, kInputError);
  EXPECT_EQ(invoke({"classify", "--size", "0"}).code, kInputError);
  EXPECT_EQ(invoke({"classify"}).code, kInputError);
}

TEST(Cli, Decompose) {
  const Result r = invoke({"decompose", data("six_element.json"), "--json"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  EXPECT_NE(r.out.find("group1"), std::string::npos);
  const Result bad = invoke({"decompose", data("c3.json"), "--json"});
  EXPECT_EQ(bad.code, kFails);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j.at("holds").get<bool>());
  EXPECT_EQ(j.at("stage").get<std::string>(), "nondegeneracy");
  EXPECT_EQ(invoke({"decompose", data("f4.json"), "--dual"}).code, kHolds);
}

TEST(Cli, LinearStructureQueries) {
  EXPECT_EQ(invoke({"linearize", data("h2.json")}).code, kHolds);
  EXPECT_EQ(invoke({"special", data("f4.json")}).code, kHolds);
  EXPECT_EQ(invoke({"special", data("m16.json"), "--vector", "1,0"}).code, kHolds);
  EXPECT_EQ(invoke({"special", data("m16.json"), "--vector", "1,2", "--eigenvalue", "3"}).code, kFails);
  EXPECT_EQ(invoke({"special", data("six_element.json")}).code, kInputError);
  EXPECT_EQ(invoke({"special", data("m16.json"), "--vector", "1,x"}).code, kInputError);
  const Result u = invoke({"units", data("m16.json"), "--json"});
  EXPECT_EQ(u.code, kHolds);
  EXPECT_EQ(invoke({"counits", data("m16.json")}).code, kHolds);
}

TEST(Cli, Isomorphisms) {
  EXPECT_EQ(invoke({"iso", data("m17.json"), data("f4.json"), "--witness", data("basis_sum_first.json")}).code, kHolds);
  EXPECT_EQ(invoke({"iso", data("m17.json"), data("f4.json"), "--witness", data("identity2.json")}).code, kFails);
  EXPECT_EQ(invoke({"iso", data("f4.json"), data("h2.json")}).code, kFails);
  EXPECT_EQ(invoke({"iso", data("h2.json"), data("h2.json")}).code, kHolds);
  EXPECT_EQ(invoke({"iso", data("h2.json"), data("h2.json"), "--witness", data("swap_map.json")}).code, kFails);
}

TEST(Cli, HopfAndReconstruct) {
  EXPECT_EQ(invoke({"hopf-group", data("z3.json")}).code, kHolds);
  EXPECT_EQ(invoke({"hopf-group", data("s3.json"), "--dual", "--variant", "eas-prime", "--json"}).code, kHolds);
  EXPECT_EQ(invoke({"reconstruct", data("m16.json"), "--unit", "1,0", "--counit", "1,1"}).code, kHolds);
  EXPECT_EQ(invoke({"reconstruct", data("m16.json"), "--unit", "0,1", "--counit", "1,1"}).code, kFails);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kHolds);
}

}  // namespace
}  // namespace easlab::cli
