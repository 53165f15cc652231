// MIT License
//
// Copyright (c) 2026 The bobw-mpc authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to deal
// in the Software without restriction, including without limitation the rights
// to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
// copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in all
// copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
// OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
// SOFTWARE.

#include <gtest/gtest.h>

#include "bobw/scenario.hpp"

using namespace bobw;

namespace {

const std::string kDir = BOBW_SCENARIO_DIR;

Json base(const char* protocol) {
  return Json{{"n", 4}, {"zs", {{"threshold", 1}}}, {"za", Json::array()}, {"protocol", protocol}, {"mode", "sync"}};
}

}  // namespace

TEST(Scenario, ExampleConfigValidates) {
  const Scenario s = Scenario::load(kDir + "/example_check.json");
  const Validation v = validate(s);
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(v.con.ok);
  EXPECT_EQ(s.n, 8);
}

TEST(Scenario, RejectsBadConfigs) {
  const Validation a = validate(Scenario::load(kDir + "/bad_con.json"));
  EXPECT_FALSE(a.ok);
  EXPECT_FALSE(a.con.ok);
  EXPECT_FALSE(validate(Scenario::load(kDir + "/bad_sync_corrupt.json")).ok);
  Json j = base("acast");
  j["p"] = 100;
  EXPECT_FALSE(validate(Scenario::from_json(j)).ok);
  j = base("nonsense");
  EXPECT_ANY_THROW(validate(Scenario::from_json(j)));
}

TEST(Scenario, RoundTripsThroughJson) {
  const Scenario s = Scenario::load(kDir + "/vss_bad_dealer.json");
  const Scenario t = Scenario::from_json(s.to_json(), kDir);
  EXPECT_EQ(s.to_json().dump(), t.to_json().dump());
}

TEST(Scenario, SuiteIsDeterministic) {
  Json j = base("acast");
  j["mode"] = "async";
  j["scheduler"] = "uniform(1,5)";
  j["sender"] = 2;
  j["value"] = {4, 5};
  const Scenario s = Scenario::from_json(j);
  const Json a = run_suite(s, {3, 1, 2}), b = run_suite(s, {1, 2, 3, 3});
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_TRUE(report_ok(a));
  EXPECT_EQ(a["aggregate"]["runs"], 3);
}

TEST(Scenario, DiffFindsFirstDivergence) {
  Json j = base("sba");
  j["mode"] = "async";
  j["inputs"] = {1, 2, 1, 2};
  const Scenario s = Scenario::from_json(j);
  const auto a = run_seed(s, 1, true), b = run_seed(s, 1, true), c = run_seed(s, 2, true);
  EXPECT_TRUE(diff_traces(a.trace, b.trace).identical);
  const Divergence d = diff_traces(a.trace, c.trace);
  EXPECT_FALSE(d.identical);
  EXPECT_NE(d.a, d.b);
  EXPECT_TRUE(diff_traces(std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x", "y"}).identical);
  const Divergence e = diff_traces(std::vector<std::string>{"x", "y"}, std::vector<std::string>{"x"});
  EXPECT_EQ(e.index, 1u);
  EXPECT_EQ(e.b, "");
}
