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

#include "bobw/proto/acs.hpp"

namespace bobw::proto {

namespace {
constexpr std::uint32_t kCoreKey = 1000;
}

AcsCore::AcsCore(Runtime& rt, Route route, PartySet q, Tick anchor)
    : Node(rt, std::move(route)), q_(q), anchor_(anchor) {
  ba_.resize(n());
  q_.for_each([&](PartyId j) {
    ba_[j] = std::make_unique<BaNode>(rt_, child_route(static_cast<std::uint32_t>(j)), ctx().zs);
    ba_[j]->on_output = [this, j](int b) { on_ba(j, b); };
  });
  at(anchor_ + ctx().timing.vss(), [this] {
    after_vss_ = true;
    (vss_done_ & q_).for_each([&](PartyId j) { start_ba(j, 1); });
  });
  at(anchor_ + ctx().timing.acs(), [this] {
    floor_reached_ = true;
    try_finish();
  });
}

void AcsCore::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  const std::uint32_t key = next_key(m);
  if (key < static_cast<std::uint32_t>(n()) && ba_[key]) ba_[key]->receive(from, m);
}

void AcsCore::vss_done(PartyId j) {
  if (!q_.contains(j)) return;
  vss_done_.insert(j);
  if (after_vss_) start_ba(j, 1);
  try_finish();
}

void AcsCore::start_ba(PartyId j, int input) {
  if (started_.contains(j)) return;
  started_.insert(j);
  ba_[j]->start(input);
}

void AcsCore::on_ba(PartyId j, int b) {
  decided_.insert(j);
  if (b == 1) ones_.insert(j);
  if (!zeros_ && ctx().zs.contains(q_ - ones_)) {
    zeros_ = true;
    (q_ - started_).for_each([&](PartyId k) { start_ba(k, 0); });
  }
  try_finish();
}

void AcsCore::try_finish() {
  if (done_ || !floor_reached_ || decided_ != q_ || !ones_.subset_of(vss_done_)) return;
  done_ = true;
  cs_ = ones_;
  out_time_ = now();
  probe("acs.cs", {static_cast<std::int64_t>(cs_.bits())});
  if (on_output) on_output(cs_);
}

AcsNode::AcsNode(Runtime& rt, Route route, PartySet q, int L, Tick anchor)
    : Node(rt, route), q_(q), L_(L), core_(rt, child_route(kCoreKey), q, anchor) {
  vss_.resize(n());
  q_.for_each([&](PartyId j) {
    vss_[j] = std::make_unique<VssNode>(rt_, child_route(static_cast<std::uint32_t>(j)), j, L_, anchor);
    vss_[j]->on_output = [this, j](const ShareBlock&) { core_.vss_done(j); };
  });
  core_.on_output = [this](PartySet) { try_finish(); };
}

void AcsNode::start(const std::vector<Fe>& inputs) {
  if (q_.contains(self())) vss_[self()]->start(inputs);
}

void AcsNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  const std::uint32_t key = next_key(m);
  if (key == kCoreKey) core_.receive(from, m);
  else if (key < static_cast<std::uint32_t>(n()) && vss_[key]) vss_[key]->receive(from, m);
}

void AcsNode::try_finish() {
  if (done_ || !core_.has_output()) return;
  done_ = true;
  out_time_ = now();
  std::vector<const ShareBlock*> shares(n(), nullptr);
  core_.output().for_each([&](PartyId j) { shares[j] = &vss_[j]->output(); });
  if (on_output) on_output(core_.output(), shares);
}

}  // namespace bobw::proto
