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

ValuePtr val(std::uint64_t w) { return sim::make_value({w, w + 1}); }

}  // namespace

TEST(Acast, HonestSenderSyncExactlyThreeDelta) {
  for (Tick delta : {1, 4}) {
    RunOptions o = sync_opts();
    o.net.delta = delta;
    const auto r = run_acast(example_zs(), 2, val(9), o);
    ASSERT_FALSE(r.timed_out);
    for (const auto& p : r.out) {
      ASSERT_TRUE(p.has);
      EXPECT_EQ(p.time, 3 * delta);
      EXPECT_TRUE(sim::same_value(p.value, val(9)));
    }
  }
}

TEST(Acast, HonestSenderAsyncEventuallyDelivers) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunOptions o = async_opts(seed, "uniform(1,6)");
    o.corrupt = S({1, 3});
    o.strategy = sim::StrategySpec::parse("crash");
    const auto r = run_acast(example_zs(), 4, val(1), o);
    (PartySet::all(8) - o.corrupt).for_each([&](PartyId p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_TRUE(sim::same_value(r.out[p].value, val(1)));
    });
  }
}

TEST(Acast, EquivocatingSenderYieldsOneValue) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RunOptions o = seed % 2 ? async_opts(seed) : sync_opts(seed);
    o.corrupt = S({1, 2, 3});
    o.strategy = sim::StrategySpec::parse("equivocate");
    const auto r = run_acast(example_zs(), 0, val(5), o);
    ValuePtr first;
    bool seen = false;
    (PartySet::all(8) - o.corrupt).for_each([&](PartyId p) {
      if (!r.out[p].has) return;
      if (!seen) first = r.out[p].value;
      seen = true;
      EXPECT_TRUE(sim::same_value(first, r.out[p].value)) << "seed " << seed;
    });
  }
}

TEST(Bc, HonestSenderRegularAtDeadline) {
  const proto::Timing t{8, 1};
  const auto r = run_bc(example_zs(), 6, val(3), sync_opts());
  for (const auto& b : r.out) {
    EXPECT_TRUE(b.regular_done);
    EXPECT_EQ(b.regular_time, t.bc());
    EXPECT_EQ(t.bc(), 27);
    EXPECT_TRUE(sim::same_value(b.regular, val(3)));
    EXPECT_TRUE(b.has);
    EXPECT_FALSE(b.fallback);
  }
}

TEST(Bc, LateCorruptSenderFallsBackConsistently) {
  const AdversaryStructure z = AdversaryStructure::threshold(4, 1);
  const proto::Timing t{4, 1};
  RunOptions o = sync_opts(3);
  o.corrupt = S({1});
  o.strategy = sim::StrategySpec::parse("honest");
  const auto r = run_bc(z, 0, val(8), o, t.bc());
  Tick lo = 1 << 30, hi = -1;
  for (PartyId p = 1; p < 4; ++p) {
    const BcOut& b = r.out[p];
    EXPECT_TRUE(b.regular_done);
    EXPECT_EQ(b.regular_time, t.bc());
    EXPECT_EQ(b.regular, nullptr);
    ASSERT_TRUE(b.has);
    EXPECT_TRUE(b.fallback);
    EXPECT_TRUE(sim::same_value(b.value, val(8)));
    lo = std::min(lo, b.time);
    hi = std::max(hi, b.time);
  }
  EXPECT_LE(hi - lo, 2);
}

TEST(Bc, AsyncHonestSenderEventualOutput) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = run_bc(example_zs(), 0, val(2), async_opts(seed, "uniform(1,8)"));
    for (const auto& b : r.out) {
      EXPECT_TRUE(b.regular_done);
      ASSERT_TRUE(b.has);
      EXPECT_TRUE(sim::same_value(b.value, val(2)));
      if (b.regular) {
        EXPECT_TRUE(sim::same_value(b.regular, val(2)));
      }
    }
  }
}
