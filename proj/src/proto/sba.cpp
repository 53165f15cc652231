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

#include "bobw/proto/sba.hpp"

#include <stdexcept>

namespace bobw::proto {

SbaNode::SbaNode(Runtime& rt, Route route, const AdversaryStructure& z, std::vector<PartyId> kings,
                 std::vector<std::int64_t> prefix)
    : Node(rt, std::move(route)), z_(z), kings_(std::move(kings)), prefix_(std::move(prefix)) {
  if (z_.contains(PartySet::of(kings_))) throw std::invalid_argument("king set must not be corruptible");
  phases_.resize(kings_.size());
}

Message SbaNode::stamped(MsgKind kind, int phase, const ValuePtr& v) const {
  Message m = make(kind);
  m.ints.assign(prefix_.begin(), prefix_.end());
  m.ints.push_back(phase);
  m.value = v;
  return m;
}

SbaNode::Phase& SbaNode::phase(int k) { return phases_[static_cast<std::size_t>(k)]; }

void SbaNode::start(Tick t0, ValuePtr input) {
  if (started_) return;
  started_ = true;
  pref_ = std::move(input);
  const Tick d = delta();
  const Tick end = t0 + rt_.ctx().timing.n * 3 * d;
  if (now() > end) {
    pref_ = nullptr;
    finish();
    return;
  }
  for (int k = 0; k < static_cast<int>(kings_.size()); ++k) {
    const Tick base = t0 + 3 * k * d;
    if (base >= now()) at(base, [this, k] { step_pref(k); });
    if (base + d >= now()) at(base + d, [this, k] { step_propose(k); });
    if (base + 2 * d >= now()) at(base + 2 * d, [this, k] { step_king(k); });
    if (base + 3 * d >= now()) at(base + 3 * d, [this, k] { step_adopt(k); });
  }
  at(end, [this] { finish(); });
}

void SbaNode::receive(PartyId from, const Message& m) {
  if (m.ints.size() != prefix_.size() + 1) return;
  const std::int64_t k = m.ints.back();
  if (k < 0 || k >= static_cast<std::int64_t>(phases_.size()) || has_output_) return;
  Phase& ph = phase(static_cast<int>(k));
  switch (m.kind) {
    case MsgKind::kSbaPref:
      if (ph.pref_seen.contains(from)) return;
      ph.pref_seen.insert(from);
      ph.pref.at(m.value).insert(from);
      return;
    case MsgKind::kSbaPropose:
      if (ph.propose_seen.contains(from)) return;
      ph.propose_seen.insert(from);
      ph.propose.at(m.value).insert(from);
      return;
    case MsgKind::kSbaKing:
      if (from != kings_[static_cast<std::size_t>(k)] || ph.has_king) return;
      ph.has_king = true;
      ph.king = m.value;
      return;
    default: return;
  }
}

void SbaNode::step_pref(int k) {
  probe("sba.pref", {k, pref_ ? static_cast<std::int64_t>(sim::hash_words(0, pref_->data(), pref_->size()) >> 1) : -1});
  send_all(stamped(MsgKind::kSbaPref, k, pref_));
}

void SbaNode::step_propose(int k) {
  for (const auto& [v, who] : phase(k).pref.sorted()) {
    if (z_.covers_complement(who, everyone())) {
      probe("sba.propose", {k, v ? static_cast<std::int64_t>(sim::hash_words(0, v->data(), v->size()) >> 1) : -1});
      send_all(stamped(MsgKind::kSbaPropose, k, v));
      return;
    }
  }
}

void SbaNode::step_king(int k) {
  Phase& ph = phase(k);
  const auto proposals = ph.propose.sorted();
  for (const auto& [v, who] : proposals) {
    if (!z_.contains(who)) {
      pref_ = v;
      break;
    }
  }
  for (const auto& [v, who] : proposals) {
    if (z_.covers_complement(who, everyone())) {
      ph.has_strong = true;
      ph.strong = v;
      break;
    }
  }
  if (kings_[static_cast<std::size_t>(k)] == self()) send_all(stamped(MsgKind::kSbaKing, k, pref_));
}

void SbaNode::step_adopt(int k) {
  Phase& ph = phase(k);
  if (ph.has_strong) pref_ = ph.strong;
  else pref_ = ph.has_king ? ph.king : nullptr;
  probe("sba.end", {k, pref_ ? static_cast<std::int64_t>(sim::hash_words(0, pref_->data(), pref_->size()) >> 1) : -1});
}

void SbaNode::finish() {
  if (has_output_) return;
  has_output_ = true;
  phases_.clear();
  phases_.shrink_to_fit();
  if (on_output) on_output(pref_);
}

}  // namespace bobw::proto
