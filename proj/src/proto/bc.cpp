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

#include "bobw/proto/bc.hpp"

namespace bobw::proto {

std::vector<PartyId> default_kings(int n) {
  std::vector<PartyId> k(n);
  for (int i = 0; i < n; ++i) k[i] = i;
  return k;
}

BcNode::BcNode(Runtime& rt, Route route, const AdversaryStructure& z, PartyId sender, Tick anchor)
    : Node(rt, route),
      sender_(sender),
      anchor_(anchor),
      acast_(rt, child_route(0), z, sender, {anchor}),
      sba_(rt, child_route(1), z, default_kings(z.n()), {anchor}) {
  acast_.on_output = [this](const ValuePtr& v) {
    if (regular_done_ && !regular_ && !has_output_) emit(v, true);
  };
  sba_.on_output = [this](const ValuePtr& v) { on_sba(v); };
  const Tick t = anchor_ + 3 * delta();
  if (t >= now()) at(t, [this] { start_sba(); });
  else start_sba();
}

void BcNode::start(ValuePtr m) {
  if (self() == sender_) acast_.start(std::move(m));
}

void BcNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  const std::uint32_t key = next_key(m);
  if (key == 0) acast_.receive(from, m);
  else if (key == 1) sba_.receive(from, m);
}

void BcNode::start_sba() {
  sba_.start(anchor_ + 3 * delta(), acast_.has_output() ? acast_.output() : nullptr);
}

void BcNode::on_sba(const ValuePtr& v) {
  regular_done_ = true;
  if (acast_.has_output() && v && sim::same_value(v, acast_.output())) regular_ = acast_.output();
  if (on_regular) on_regular(regular_);
  if (regular_) emit(regular_, false);
  else if (acast_.has_output()) emit(acast_.output(), true);
}

void BcNode::emit(const ValuePtr& v, bool fallback) {
  has_output_ = true;
  output_ = v;
  fallback_ = fallback;
  output_time_ = now();
  if (on_output) on_output(v, fallback);
}

}  // namespace bobw::proto
