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

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "bobw/party_set.hpp"

namespace bobw::testing {

// Independent oracle: every k-tuple of members (with repetition) drawn from the full set list.
inline bool naive_q(PartySet scope, const std::vector<PartySet>& zs, int k, const std::vector<PartySet>& za, int kp) {
  std::vector<PartySet> unions_a{PartySet{}};
  for (int r = 0; r < kp && !za.empty(); ++r) {
    std::vector<PartySet> next;
    for (PartySet u : unions_a)
      for (PartySet z : za) next.push_back(u | z);
    unions_a = next;
  }
  std::vector<PartySet> unions{PartySet{}};
  for (int r = 0; r < k && !zs.empty(); ++r) {
    std::vector<PartySet> next;
    for (PartySet u : unions)
      for (PartySet z : zs) next.push_back(u | z);
    unions = next;
  }
  for (PartySet a : unions_a)
    for (PartySet u : unions)
      if (scope.subset_of(a | u)) return false;
  return true;
}

inline std::vector<PartySet> random_sets(std::mt19937_64& rng, int n, int count) {
  std::vector<PartySet> out;
  const PartySet all = PartySet::all(n);
  while (static_cast<int>(out.size()) < count) {
    PartySet s(rng() & all.bits());
    if (s == all || std::find(out.begin(), out.end(), s) != out.end()) continue;
    // Keep sets small enough that the conditions are not trivially false.
    if (s.size() > (n + 1) / 2) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace bobw::testing
