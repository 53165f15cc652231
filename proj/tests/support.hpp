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

#include <initializer_list>

#include "bobw/runner.hpp"

namespace bobw::testing {

// 1-based party list to a set.
inline PartySet S(std::initializer_list<int> ids) {
  PartySet s;
  for (int i : ids) s.insert(i - 1);
  return s;
}

// The eight-party example pair used throughout.
inline AdversaryStructure example_zs() {
  return AdversaryStructure(8, {S({1, 2, 3}), S({2, 3, 4}), S({3, 4, 5}), S({4, 5, 6}), S({7}), S({8})}, "zs");
}
inline AdversaryStructure example_za() {
  return AdversaryStructure(8, {S({1, 3}), S({2, 4}), S({3, 5}), S({4, 6})}, "za");
}
inline proto::Context example_context(Tick delta = 1, std::uint64_t p = PrimeField::kDefaultPrime) {
  return proto::Context(example_zs(), example_za(), PrimeField(p), delta);
}
// Four parties, one synchronous corruption, no asynchronous corruption.
inline proto::Context small_context(Tick delta = 1, std::uint64_t p = PrimeField::kDefaultPrime) {
  return proto::Context(AdversaryStructure::threshold(4, 1, "zs"), AdversaryStructure(4, {}, "za"), PrimeField(p), delta);
}

inline RunOptions sync_opts(std::uint64_t seed = 0) {
  RunOptions o;
  o.seed = seed;
  return o;
}
inline RunOptions async_opts(std::uint64_t seed = 0, const char* sched = "eventual") {
  RunOptions o;
  o.seed = seed;
  o.net.mode = sim::NetworkMode::kAsync;
  o.net.sched = sim::SchedulerStrategy::parse(sched);
  return o;
}

}  // namespace bobw::testing
