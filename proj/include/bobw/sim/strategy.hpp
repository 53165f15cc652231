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

#include <string>

#include "bobw/field.hpp"
#include "bobw/party_set.hpp"
#include "bobw/sim/message.hpp"

namespace bobw::sim {

enum class StrategyKind {
  kHonest,       // corrupt but follows the protocol
  kCrash,        // silent from `crash_at` on
  kEquivocate,   // value-carrying messages differ between receiver groups
  kWrongValue,   // every value-carrying message is altered
  kDelayMax,     // messages take the longest legal delay
  kWrongShare,   // field elements in share messages are shifted
  kBadDealer,    // as dealer, hands inconsistent shares to `victims`
  kWrongSummand, // as dealer, shifts share 0 consistently (commits to another value)
  kBiasedInput,  // replaces its own inputs / random contributions by `fixed_input`
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::kHonest;
  Tick crash_at = 0;
  Fe offset = 1;
  PartySet victims;          // empty: odd-indexed parties
  int target_set = -1;       // bad-dealer: only this share index (-1: all)
  Fe fixed_input = 0;

  // Accepts: honest, crash, crash@T, equivocate, wrong-value, delay-max, wrong-share,
  // bad-dealer, bad-dealer@M, bad-dealer@M:v1,v2 (1-based), wrong-summand, biased-input.
  static StrategySpec parse(const std::string& name);
  std::string name() const;
};

class Strategy {
 public:
  Strategy(StrategySpec spec, int n, PrimeField field);
  const StrategySpec& spec() const { return spec_; }
  // Message actually sent from `from` to `to`; null drops it.
  MessagePtr transform(PartyId to, Tick now, const MessagePtr& m) const;
  bool delays_max() const { return spec_.kind == StrategyKind::kDelayMax; }

 private:
  bool victim(PartyId to) const { return spec_.victims.contains(to); }
  StrategySpec spec_;
  PrimeField field_;
};

}  // namespace bobw::sim
