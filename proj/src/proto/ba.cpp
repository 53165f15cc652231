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

#include "bobw/proto/ba.hpp"

namespace bobw::proto {

int ba_vstar(const AdversaryStructure& z, const std::vector<int>& bits, int own) {
  const int n = static_cast<int>(bits.size());
  PartySet r, with[2];
  for (int j = 0; j < n; ++j) {
    if (bits[j] < 0) continue;
    r.insert(j);
    with[bits[j]].insert(j);
  }
  if (!z.contains(PartySet::all(n) - r)) return own;
  for (int b = 0; b < 2; ++b)
    if (z.contains(r - with[b])) return b;
  return 1;
}

BaNode::BaNode(Runtime& rt, Route route, const AdversaryStructure& z)
    : Node(rt, route), z_(z), aba_(rt, child_route(static_cast<std::uint32_t>(kMaxParties)), z) {
  aba_.on_output = [this](int b) {
    if (on_output) on_output(b);
  };
}

void BaNode::start(int input) {
  if (started_) return;
  started_ = true;
  input_ = input & 1;
  const Tick anchor = now();
  bc_.resize(n());
  for (PartyId j = 0; j < n(); ++j) {
    bc_[j] = std::make_unique<BcNode>(rt_, child_route(static_cast<std::uint32_t>(j)), z_, j, anchor);
    bc_[j]->on_regular = [this](const ValuePtr&) { on_regular(); };
  }
  bc_[self()]->start(sim::make_value(Blob{static_cast<std::uint64_t>(input_)}));
  auto pending = std::move(buffer_);
  buffer_.clear();
  for (auto& [from, m] : pending) receive(from, *m);
}

void BaNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  if (!started_) {
    buffer_.emplace_back(from, std::make_shared<const Message>(m));
    return;
  }
  const std::uint32_t key = next_key(m);
  if (key == static_cast<std::uint32_t>(kMaxParties)) aba_.receive(from, m);
  else if (key < static_cast<std::uint32_t>(n())) bc_[key]->receive(from, m);
}

void BaNode::on_regular() {
  if (++regular_count_ < n()) return;
  std::vector<int> bits(n(), -1);
  for (PartyId j = 0; j < n(); ++j) {
    const ValuePtr& v = bc_[j]->regular();
    if (v && v->size() == 1 && (*v)[0] <= 1) bits[j] = static_cast<int>((*v)[0]);
  }
  vstar_ = ba_vstar(z_, bits, input_);
  probe("ba.vstar", {input_, vstar_});
  aba_.start(vstar_);
}

}  // namespace bobw::proto
