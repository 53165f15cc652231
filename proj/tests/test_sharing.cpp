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

#include "bobw/sharing.hpp"
#include "support.hpp"

using namespace bobw;
using namespace bobw::testing;

TEST(Field, Arithmetic) {
  const PrimeField f(97);
  EXPECT_EQ(f.add(90, 10), 3u);
  EXPECT_EQ(f.sub(3, 10), 90u);
  EXPECT_EQ(f.mul(50, 2), 3u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.from_int(-1), 96u);
  const PrimeField big;
  EXPECT_EQ(big.mul(big.modulus() - 1, big.modulus() - 1), 1u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(f.valid(f.random(rng)));
}

TEST(Sharing, RoundTrip) {
  const SharingSpec spec(example_zs());
  const PrimeField f;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Fe s = f.random(rng);
    const auto sh = share(s, spec, f, rng);
    ASSERT_EQ(static_cast<int>(sh.shares.size()), spec.q());
    ASSERT_EQ(reconstruct(f, sh), s);
  }
}

TEST(Sharing, SmallFieldAndSingleSet) {
  const PrimeField f(97);
  std::mt19937_64 rng(3);
  const SharingSpec one(AdversaryStructure(3, {PartySet{}}));
  const auto sh = share(5, one, f, rng);
  ASSERT_EQ(sh.shares.size(), 1u);
  EXPECT_EQ(sh.shares[0], 5u);
  const SharingSpec three(AdversaryStructure(4, {S({1}), S({2}), S({3})}));
  EXPECT_EQ(reconstruct(f, share(5, three, f, rng)), 5u);
}

TEST(Sharing, DefaultAndLinear) {
  const SharingSpec spec(example_zs());
  const PrimeField f(97);
  std::mt19937_64 rng(5);
  const auto d = default_sharing(11, spec);
  EXPECT_EQ(d.shares[0], 11u);
  for (int m = 1; m < spec.q(); ++m) EXPECT_EQ(d.shares[m], 0u);
  for (int i = 0; i < 200; ++i) {
    const Fe x = f.random(rng), y = f.random(rng), c1 = f.random(rng), c2 = f.random(rng);
    const auto z = lin_combine(f, c1, share(x, spec, f, rng), c2, share(y, spec, f, rng));
    ASSERT_EQ(reconstruct(f, z), f.add(f.mul(c1, x), f.mul(c2, y)));
  }
  const auto a = share(4, spec, f, rng);
  EXPECT_EQ(lin_combine(f, 1, a, 0, share(9, spec, f, rng)).shares, a.shares);
}

TEST(Sharing, ViewRespectsHolders) {
  const SharingSpec spec(example_zs());
  std::mt19937_64 rng(1);
  const auto sh = share(3, spec, PrimeField(), rng);
  for (PartyId i = 0; i < 8; ++i) {
    const auto v = sh.view(spec, i);
    EXPECT_EQ(v.size(), spec.held_by(i).size());
    for (auto [m, x] : v) {
      EXPECT_TRUE(spec.set(m).contains(i));
      EXPECT_EQ(x, sh.shares[m]);
    }
  }
}

TEST(ShareBlock, ColumnsAndAxpy) {
  const PrimeField f(97);
  ShareBlock a(2, 3), b(2, 3);
  for (int m = 0; m < 2; ++m)
    for (int l = 0; l < 3; ++l) {
      a.at(m, l) = m * 10 + l;
      b.at(m, l) = 1;
    }
  a.axpy(f, 2, b);
  EXPECT_EQ(a.at(1, 2), 14u);
  const ShareBlock c = a.column(1);
  EXPECT_EQ(c.L(), 1);
  EXPECT_EQ(c.at(1, 0), 13u);
  const ShareBlock cat = ShareBlock::concat({&a, &c});
  EXPECT_EQ(cat.L(), 4);
  EXPECT_EQ(cat.at(1, 3), 13u);
  a.add_constant(f, 0, 5, true);
  EXPECT_EQ(a.at(0, 0), 7u);
  a.add_constant(f, 0, 5, false);
  EXPECT_EQ(a.at(0, 0), 7u);
}
