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

std::vector<SecretSharing> share_vec(const proto::Context& ctx, const std::vector<Fe>& v, std::mt19937_64& rng) {
  std::vector<SecretSharing> out;
  for (Fe x : v) out.push_back(share(x, ctx.spec, ctx.field, rng));
  return out;
}

template <typename Out>
Assembled gather(const proto::Context& ctx, PartySet h, const std::vector<Out>& out) {
  std::vector<const ShareBlock*> v(out.size(), nullptr);
  h.for_each([&](PartyId p) { if (out[p].has) v[p] = &out[p].value; });
  return assemble(ctx, h, v);
}

}  // namespace

TEST(Rec, WrongShareStillCorrect) {
  const auto ctx = example_context();
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunOptions o = seed % 2 ? async_opts(seed) : sync_opts(seed);
    o.corrupt = seed % 2 ? S({2, 4}) : S({1, 2, 3});
    o.strategy = sim::StrategySpec::parse("wrong-share");
    const std::vector<Fe> secrets{seed, seed * 7 + 1};
    const auto r = run_rec(ctx, share_vec(ctx, secrets, rng), o);
    (PartySet::all(8) - o.corrupt).for_each([&](PartyId p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].value, secrets);
      if (seed % 2 == 0) {
        EXPECT_EQ(r.out[p].time, 1);
      }
    });
  }
}

TEST(Beaver, MatchesPlaintextProduct) {
  const auto ctx = small_context();
  const auto& f = ctx.field;
  std::mt19937_64 rng(4);
  std::vector<Fe> x, y, a, b, c;
  for (int l = 0; l < 50; ++l) {
    x.push_back(f.random(rng));
    y.push_back(f.random(rng));
    a.push_back(f.random(rng));
    b.push_back(f.random(rng));
    c.push_back(f.mul(a.back(), b.back()));
  }
  const auto r = run_beaver(ctx, share_vec(ctx, x, rng), share_vec(ctx, y, rng), share_vec(ctx, a, rng),
                            share_vec(ctx, b, rng), share_vec(ctx, c, rng), sync_opts());
  for (const auto& o : r.out) EXPECT_EQ(o.time, 1);
  const Assembled z = gather(ctx, PartySet::all(4), r.out);
  ASSERT_TRUE(z.consistent && z.complete);
  for (int l = 0; l < 50; ++l) EXPECT_EQ(z.values[l], f.mul(x[l], y[l]));
}

TEST(Acs, SyncIncludesAllHonestAtDeadline) {
  const auto ctx = example_context();
  std::vector<std::vector<Fe>> in;
  for (int i = 0; i < 8; ++i) in.push_back({static_cast<Fe>(100 + i)});
  RunOptions o = sync_opts(1);
  o.corrupt = S({7});
  o.strategy = sim::StrategySpec::parse("crash");
  const auto r = run_acs(ctx, PartySet::all(8), in, o);
  const PartySet h = PartySet::all(8) - o.corrupt;
  h.for_each([&](PartyId p) {
    ASSERT_TRUE(r.out[p].has);
    EXPECT_EQ(r.out[p].time, ctx.timing.acs());
    EXPECT_TRUE(h.subset_of(r.out[p].cs));
    EXPECT_EQ(r.out[p].cs, r.out[0].cs);
  });
  EXPECT_EQ(ctx.timing.acs(), 152);
}

TEST(Acs, AsyncCommonSetHasHonestParty) {
  const auto ctx = small_context();
  std::vector<std::vector<Fe>> in(4, std::vector<Fe>{1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = run_acs(ctx, PartySet::all(4), in, async_opts(seed, "uniform(1,7)"));
    for (PartyId p = 0; p < 4; ++p) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].cs, r.out[0].cs);
      EXPECT_TRUE(ctx.zs.contains(PartySet::all(4) - r.out[p].cs));
    }
  }
}

TEST(Mult, ProductsUnderWrongSummand) {
  const auto ctx = small_context();
  const auto& f = ctx.field;
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::vector<Fe> a{f.random(rng), 3}, b{f.random(rng), 5};
    RunOptions o = seed % 2 ? async_opts(seed) : sync_opts(seed);
    o.corrupt = S({2});
    o.strategy = sim::StrategySpec::parse("wrong-summand");
    const auto r = run_mult(ctx, share_vec(ctx, a, rng), share_vec(ctx, b, rng), o);
    const PartySet h = PartySet::all(4) - o.corrupt;
    const Assembled c = gather(ctx, h, r.out);
    ASSERT_TRUE(c.consistent && c.complete) << seed;
    EXPECT_EQ(c.values[0], f.mul(a[0], b[0]));
    EXPECT_EQ(c.values[1], 15u);
    EXPECT_EQ(r.honest_openings, 0u);
    if (seed % 2 == 0) h.for_each([&](PartyId p) { EXPECT_LE(r.out[p].time, ctx.timing.mult()); });
  }
}

TEST(Preprocessing, TriplesAreProducts) {
  const auto ctx = small_context();
  const auto r = run_preprocessing(ctx, 3, sync_opts(2));
  std::vector<const ShareBlock*> va(4), vb(4), vc(4);
  for (PartyId p = 0; p < 4; ++p) {
    ASSERT_TRUE(r.out[p].has);
    EXPECT_LE(r.out[p].time, ctx.timing.preprocessing());
    EXPECT_EQ(r.out[p].cs, PartySet::all(4));
    va[p] = &r.out[p].a;
    vb[p] = &r.out[p].b;
    vc[p] = &r.out[p].c;
  }
  const auto a = assemble(ctx, PartySet::all(4), va), b = assemble(ctx, PartySet::all(4), vb),
             c = assemble(ctx, PartySet::all(4), vc);
  ASSERT_TRUE(c.complete && c.consistent);
  for (int l = 0; l < 3; ++l) EXPECT_EQ(c.values[l], ctx.field.mul(a.values[l], b.values[l]));
}
