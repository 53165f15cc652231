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

#include "bobw/proto/acast.hpp"

#include <algorithm>

namespace bobw::proto {

std::vector<std::pair<ValuePtr, PartySet>> Tally::sorted() const {
  auto v = items_;
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return sim::value_less(a.first, b.first); });
  return v;
}

AcastNode::AcastNode(Runtime& rt, Route route, const AdversaryStructure& z, PartyId sender,
                     std::vector<std::int64_t> prefix)
    : Node(rt, std::move(route)), z_(z), sender_(sender), prefix_(std::move(prefix)) {}

Message AcastNode::stamped(MsgKind kind, const ValuePtr& v) const {
  Message m = make(kind);
  m.ints.assign(prefix_.begin(), prefix_.end());
  m.value = v;
  return m;
}

void AcastNode::start(ValuePtr m) {
  if (self() != sender_) return;
  send_all(stamped(MsgKind::kAcastInit, m));
}

void AcastNode::receive(PartyId from, const Message& m) {
  switch (m.kind) {
    case MsgKind::kAcastInit:
      if (from != sender_ || echoed_) return;
      echoed_ = true;
      send_all(stamped(MsgKind::kAcastEcho, m.value));
      return;
    case MsgKind::kAcastEcho:
      if (echo_seen_.contains(from)) return;
      echo_seen_.insert(from);
      on_echo(from, m.value);
      return;
    case MsgKind::kAcastReady:
      if (ready_seen_.contains(from)) return;
      ready_seen_.insert(from);
      on_ready(from, m.value);
      return;
    default: return;
  }
}

void AcastNode::on_echo(PartyId from, const ValuePtr& v) {
  PartySet& s = echo_.at(v);
  s.insert(from);
  if (!readied_ && z_.covers_complement(s, everyone())) send_ready(v);
}

void AcastNode::on_ready(PartyId from, const ValuePtr& v) {
  PartySet& s = ready_.at(v);
  s.insert(from);
  const PartySet got = s;
  if (!readied_ && !z_.contains(got)) send_ready(v);
  if (!has_output_ && z_.covers_complement(got, everyone())) {
    has_output_ = true;
    output_ = v;
    output_time_ = now();
    if (on_output) on_output(v);
  }
}

void AcastNode::send_ready(const ValuePtr& v) {
  readied_ = true;
  send_all(stamped(MsgKind::kAcastReady, v));
}

}  // namespace bobw::proto
