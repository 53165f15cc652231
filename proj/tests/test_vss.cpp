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

std::vector<const ShareBlock*> views(const VssResult& r, PartySet honest) {
  std::vector<const ShareBlock*> v(r.out.size(), nullptr);
  honest.for_each([&](PartyId p) { if (r.out[p].has) v[p] = &r.out[p].shares; });
  return v;
}

}  // namespace

TEST(Vss, HonestDealerSyncAtDeadline) {
  const auto ctx = example_context();
  EXPECT_EQ(ctx.timing.vss(), 88);
  const std::vector<Fe> secrets{11, 22, 33};
  const auto r = run_vss(ctx, 0, secrets, sync_opts(1));
  for (PartyId p = 0; p < 8; ++p) {
    ASSERT_TRUE(r.out[p].has);
    EXPECT_EQ(r.out[p].time, 88);
    EXPECT_EQ(r.out[p].ba, 1);
    for (int m : ctx.spec.held_by(p))
      for (int l = 0; l < 3; ++l) EXPECT_EQ(r.out[p].shares.at(m, l), r.dealt[l].shares[m]);
  }
  const Assembled a = assemble(ctx, PartySet::all(8), views(r, PartySet::all(8)));
  EXPECT_TRUE(a.consistent && a.complete);
  EXPECT_EQ(a.values, secrets);
}

TEST(Vss, HonestDealerAsyncTerminates) {
  const auto ctx = example_context();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunOptions o = async_opts(seed, "uniform(1,6)");
    o.corrupt = S({2, 4});
    o.strategy = sim::StrategySpec::parse("crash");
    const auto r = run_vss(ctx, 0, {5}, o);
    const PartySet h = PartySet::all(8) - o.corrupt;
    h.for_each([&](PartyId p) { EXPECT_TRUE(r.out[p].has) << p; });
    const Assembled a = assemble(ctx, h, views(r, h));
    EXPECT_TRUE(a.consistent && a.complete);
    EXPECT_EQ(a.values, std::vector<Fe>{5});
  }
}

TEST(Vss, CorruptDealerStaysCommitted) {
  const auto ctx = example_context();
  for (const char* strat : {"bad-dealer", "bad-dealer@1:4", "wrong-share", "crash@1"}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      RunOptions o = seed % 2 ? async_opts(seed) : sync_opts(seed);
      o.corrupt = S({8});
      o.strategy = sim::StrategySpec::parse(strat);
      const auto r = run_vss(ctx, 7, {3, 4}, o);
      const PartySet h = PartySet::all(7);
      const Assembled a = assemble(ctx, h, views(r, h));
      EXPECT_TRUE(a.consistent) << strat << " seed " << seed;
      if (seed % 2 == 0) {
        // Synchronous: if any honest party finishes, all do within 2 delta.
        Tick lo = -1, hi = -1;
        int done = 0;
        h.for_each([&](PartyId p) {
          if (!r.out[p].has) return;
          lo = done ? std::min(lo, r.out[p].time) : r.out[p].time;
          hi = std::max(hi, r.out[p].time);
          ++done;
        });
        EXPECT_TRUE(done == 0 || (done == 7 && hi - lo <= 2)) << strat;
      }
    }
  }
}

TEST(Vss, BadDealerOnOneSetUsesFallbackRule) {
  // Party 4 gets a wrong share of S_1; the others in S_1 keep the committed one.
  const auto ctx = example_context();
  RunOptions o = sync_opts();
  o.corrupt = S({8});
  o.strategy = sim::StrategySpec::parse("bad-dealer@1:4");
  const auto r = run_vss(ctx, 7, {9}, o);
  const Assembled a = assemble(ctx, PartySet::all(7), views(r, PartySet::all(7)));
  EXPECT_TRUE(a.consistent && a.complete);
  for (PartyId p = 0; p < 7; ++p) {
    ASSERT_TRUE(r.out[p].has);
    EXPECT_EQ(r.out[p].time, ctx.timing.vss());
  }
}
