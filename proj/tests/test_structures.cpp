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

#include <random>

#include "bobw/structures.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace bobw;
using namespace bobw::testing;

TEST(Structures, ExampleConditions) {
  const auto zs = example_zs(), za = example_za();
  const PartySet all = PartySet::all(8);
  EXPECT_TRUE(q_condition(all, zs, 3));
  EXPECT_TRUE(q_condition(all, za, 4));
  EXPECT_TRUE(q_condition_mixed(all, zs, za, 3, 1));
  EXPECT_TRUE(check_con(zs, za).ok);
}

TEST(Structures, ContainsIsDownwardClosed) {
  const auto zs = example_zs();
  EXPECT_TRUE(zs.contains(S({1, 3})));
  EXPECT_TRUE(zs.contains(PartySet{}));
  EXPECT_FALSE(zs.contains(S({1, 4})));
  EXPECT_FALSE(zs.contains(S({7, 8})));
  EXPECT_TRUE(AdversaryStructure(4, {}).contains(PartySet{}));
  EXPECT_EQ(zs.maximal().size(), 6u);
}

TEST(Structures, CoversComplement) {
  const auto zs = example_zs();
  const PartySet all = PartySet::all(8);
  EXPECT_TRUE(zs.covers_complement(S({4, 5, 6, 7, 8}), all));
  EXPECT_FALSE(zs.covers_complement(S({5, 6, 7, 8}), all));
}

TEST(Structures, Threshold) {
  const auto z = AdversaryStructure::threshold(4, 1);
  EXPECT_EQ(z.size(), 5u);  // the empty set and four singletons
  EXPECT_TRUE(q_condition(PartySet::all(4), z, 3));
  EXPECT_FALSE(q_condition(PartySet::all(4), z, 4));
  EXPECT_FALSE(q_condition(PartySet::all(6), AdversaryStructure::threshold(6, 2), 3));
}

TEST(Structures, RejectsBadInput) {
  EXPECT_THROW(AdversaryStructure(3, {PartySet::all(3)}), std::invalid_argument);
  EXPECT_THROW(AdversaryStructure(3, {S({1}), S({1})}), std::invalid_argument);
  EXPECT_THROW(AdversaryStructure(3, {S({4})}), std::invalid_argument);
}

TEST(Structures, ConClauses) {
  const auto zs = example_zs();
  auto r = check_con(zs, zs);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed, ConReport::Clause::kDistinct);

  r = check_con(zs, AdversaryStructure(8, {S({7, 8})}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed, ConReport::Clause::kContainment);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness[0], S({7, 8}));

  // Four parties, singletons: any nonempty asynchronous set breaks Q^(3,1).
  const auto t1 = AdversaryStructure::threshold(4, 1);
  r = check_con(t1, AdversaryStructure(4, {S({1})}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed, ConReport::Clause::kQ31);
  EXPECT_TRUE(check_con(t1, AdversaryStructure(4, {})).ok);
}

TEST(Structures, OracleAgreement) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto zs_sets = random_sets(rng, n, 1 + static_cast<int>(rng() % 5));
    const auto za_sets = random_sets(rng, n, static_cast<int>(rng() % 4));
    const AdversaryStructure zs(n, zs_sets), za(n, za_sets);
    const PartySet scope(rng() & PartySet::all(n).bits());
    for (int k = 1; k <= 4; ++k) {
      ASSERT_EQ(q_condition(scope, zs, k), naive_q(scope, zs_sets, k, {}, 0)) << "trial " << trial << " k " << k;
      for (int kp = 0; kp <= 2; ++kp)
        ASSERT_EQ(q_condition_mixed(scope, zs, za, k, kp), naive_q(scope, zs_sets, k, za_sets, kp))
            << "trial " << trial << " k " << k << " kp " << kp;
    }
  }
}

TEST(Structures, SharingSpec) {
  const SharingSpec spec(example_zs());
  ASSERT_EQ(spec.q(), 6);
  EXPECT_EQ(spec.set(0), S({4, 5, 6, 7, 8}));
  EXPECT_EQ(spec.held_by(0), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(spec.held_by(6), (std::vector<int>{0, 1, 2, 3, 5}));
}
