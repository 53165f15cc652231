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

const char* kProduct = "a = INPUT 1\nb = INPUT 2\nc = INPUT 3\nd = INPUT 4\ns = ADD a b\nt = ADD c d\nm = MUL s t\nOUTPUT m\n";

}  // namespace

TEST(CirEval, SyncAllHonestMatchesPlaintext) {
  const auto ctx = small_context();
  const Circuit c = Circuit::parse(kProduct, 4);
  const std::vector<Fe> x{1, 2, 3, 4};
  const auto r = run_cireval(ctx, c, x, sync_opts(1));
  for (const auto& o : r.out) {
    ASSERT_TRUE(o.has);
    EXPECT_EQ(o.y, 21u);
    EXPECT_EQ(o.cs, PartySet::all(4));
    EXPECT_LE(o.time, ctx.timing.cireval_bound(1));
  }
}

TEST(CirEval, AsyncCrashTreatsMissingInputsAsZero) {
  const auto ctx = example_context();
  const Circuit c = Circuit::parse(kProduct, 8);
  const std::vector<Fe> x{1, 2, 3, 4, 5, 6, 7, 8};
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    RunOptions o = async_opts(seed, "uniform(1,5)");
    o.corrupt = S({1, 3});
    o.strategy = sim::StrategySpec::parse("crash");
    const auto r = run_cireval(ctx, c, x, o);
    std::vector<Fe> masked = x;
    for (PartyId j = 0; j < 8; ++j)
      if (!r.out[1].cs.contains(j)) masked[j] = 0;
    for (PartyId p : {1, 3, 4, 5, 6, 7}) {
      ASSERT_TRUE(r.out[p].has);
      EXPECT_EQ(r.out[p].y, c.evaluate(ctx.field, masked));
      EXPECT_EQ(r.out[p].cs, r.out[1].cs);
    }
  }
}

TEST(CirEval, ConstantCircuit) {
  const auto ctx = small_context();
  const Circuit c = Circuit::parse("k = CONST 42\nOUTPUT k\n", 4);
  const auto r = run_cireval(ctx, c, {1, 2, 3, 4}, sync_opts());
  for (const auto& o : r.out) {
    ASSERT_TRUE(o.has);
    EXPECT_EQ(o.y, 42u);
  }
}

TEST(CirEval, SmallFieldWraps) {
  const auto ctx = small_context(1, 101);
  const Circuit c = Circuit::parse(kProduct, 4);
  const auto r = run_cireval(ctx, c, {50, 60, 70, 80}, sync_opts());
  for (const auto& o : r.out) EXPECT_EQ(o.y, (110 % 101) * (150 % 101) % 101);
}
