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

#include "bobw/circuit.hpp"

using namespace bobw;

namespace {

const char* kDepth3 = R"(# D_M = 3, c_M = 4
x1 = INPUT 1
x2 = INPUT 2
x3 = INPUT 3
x4 = INPUT 4
m1 = MUL x1 x2
m2 = MUL x3 x4
m3 = MUL m1 m2
t = CADD 5 m3
m4 = MUL t x1
y = CMUL 2 m4
OUTPUT y
)";

}  // namespace

TEST(Circuit, ParseAndShape) {
  const Circuit c = Circuit::parse(kDepth3, 4);
  EXPECT_EQ(c.mul_depth(), 3);
  EXPECT_EQ(c.mul_count(), 4);
  ASSERT_EQ(c.levels().size(), 3u);
  EXPECT_EQ(c.levels()[0].size(), 2u);
  EXPECT_EQ(c.levels()[1].size(), 1u);
  EXPECT_EQ(c.levels()[2].size(), 1u);
  // Triple indices follow topological order.
  std::vector<int> idx;
  for (const Gate& g : c.gates())
    if (g.op == Gate::Op::kMul) idx.push_back(g.mul_index);
  EXPECT_EQ(idx, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Circuit, PlaintextOracle) {
  const Circuit c = Circuit::parse(kDepth3, 4);
  const PrimeField f(97);
  // y = 2 * ((x1 x2 x3 x4 + 5) * x1)
  for (Fe a = 0; a < 5; ++a) {
    const std::vector<Fe> x{a, 2, 3, 4};
    const Fe expect = f.mul(2, f.mul(f.add(f.mul(f.mul(a, 2), f.mul(3, 4)), 5), a));
    EXPECT_EQ(c.evaluate(f, x), expect);
  }
}

TEST(Circuit, ConstantAndLinear) {
  const PrimeField f;
  const Circuit k = Circuit::parse("c = CONST 5\nOUTPUT c\n", 4);
  EXPECT_EQ(k.evaluate(f, {1, 2, 3, 4}), 5u);
  EXPECT_EQ(k.mul_depth(), 0);
  const Circuit s = Circuit::parse("a = INPUT 1\nb = INPUT 2\nc = ADD a b\nd = CMUL -1 c\nOUTPUT d\n", 2);
  EXPECT_EQ(s.evaluate(f, {3, 4}), f.from_int(-7));
}

TEST(Circuit, Errors) {
  EXPECT_THROW(Circuit::parse("a = INPUT 5\nOUTPUT a\n", 4), std::invalid_argument);
  EXPECT_THROW(Circuit::parse("a = ADD b c\nOUTPUT a\n", 4), std::invalid_argument);
  EXPECT_THROW(Circuit::parse("a = INPUT 1\n", 4), std::invalid_argument);
  EXPECT_THROW(Circuit::parse("a = FOO 1\nOUTPUT a\n", 4), std::invalid_argument);
  EXPECT_THROW(Circuit::parse("a = INPUT 1\na = INPUT 2\nOUTPUT a\n", 4), std::invalid_argument);
}
