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

#include "support.hpp"

using namespace bobw;
using namespace bobw::testing;

namespace {

std::vector<ValuePtr> words(std::initializer_list<std::uint64_t> w) {
  std::vector<ValuePtr> out;
  for (auto x : w) out.push_back(sim::make_value({x}));
  return out;
}

}  // namespace

TEST(Sba, UnanimousInputsSync) {
  const auto r = run_sba(AdversaryStructure::threshold(4, 1), words({7, 7, 7, 7}), sync_opts());
  for (const auto& p : r.out) {
    ASSERT_TRUE(p.has);
    EXPECT_EQ(p.time, 12);
    EXPECT_TRUE(sim::same_value(p.value, sim::make_value({7})));
  }
}

TEST(Sba, ConsistencyUnderEquivocation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunOptions o = sync_opts(seed);
    o.corrupt = S({1, 2, 3});
    o.strategy = sim::StrategySpec::parse(seed % 2 ? "equivocate" : "wrong-value");
    const auto r = run_sba(example_zs(), words({1, 2, 3, 4, 4, 4, 4, 4}), o);
    for (PartyId p = 3; p < 8; ++p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].time, 24);
      EXPECT_TRUE(sim::same_value(r.out[p].value, sim::make_value({4}))) << "seed " << seed;
    }
  }
}

TEST(Sba, AsyncStillOutputsAtDeadline) {
  const auto r = run_sba(example_zs(), words({1, 2, 1, 2, 1, 2, 1, 2}), async_opts(5, "uniform(1,9)"));
  for (const auto& p : r.out) {
    EXPECT_TRUE(p.has);
    EXPECT_EQ(p.time, 24);
  }
}

TEST(Aba, ValidityAndAgreementAsync) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RunOptions o = async_opts(seed, "uniform(1,5)");
    o.corrupt = S({2, 4});
    o.strategy = sim::StrategySpec::parse(seed % 2 ? "wrong-value" : "crash");
    const int b = static_cast<int>(seed % 2);
    const auto r = run_aba(example_zs(), std::vector<int>(8, b), o);
    EXPECT_FALSE(r.timed_out);
    (PartySet::all(8) - o.corrupt).for_each([&](PartyId p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].value, b);
    });
  }
}

TEST(Aba, MixedInputsAgree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RunOptions o = async_opts(seed);
    o.corrupt = S({1, 3});
    o.strategy = sim::StrategySpec::parse("equivocate");
    const auto r = run_aba(example_zs(), {0, 1, 0, 1, 1, 0, 1, 0}, o);
    EXPECT_FALSE(r.timed_out);
    const int v = r.out[1].value;
    (PartySet::all(8) - o.corrupt).for_each([&](PartyId p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].value, v);
    });
  }
}

TEST(Ba, SyncDeadlineAndAgreement) {
  const proto::Timing t{8, 1};
  EXPECT_EQ(t.ba(), 32);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunOptions o = sync_opts(seed);
    o.corrupt = S({7});
    o.strategy = sim::StrategySpec::parse("equivocate");
    const auto r = run_ba(example_zs(), {1, 0, 1, 1, 0, 1, 1, 0}, o);
    const int v = r.out[0].value;
    for (PartyId p = 0; p < 6; ++p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_LE(r.out[p].time, t.ba());
      EXPECT_EQ(r.out[p].value, v);
    }
  }
}

TEST(Ba, UnanimousInputWins) {
  for (int b : {0, 1}) {
    const auto r = run_ba(example_zs(), std::vector<int>(8, b), sync_opts());
    for (PartyId p = 0; p < 8; ++p) {
      EXPECT_EQ(r.out[p].value, b);
      EXPECT_EQ(r.vstar[p], b);
    }
  }
}
