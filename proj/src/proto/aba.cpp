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

#include "bobw/proto/aba.hpp"

namespace bobw::proto {

AbaNode::AbaNode(Runtime& rt, Route route, const AdversaryStructure& z) : Node(rt, std::move(route)), z_(z) {}

AbaNode::Round& AbaNode::round(std::int64_t r) {
  if (static_cast<std::int64_t>(rounds_.size()) <= r) rounds_.resize(static_cast<std::size_t>(r) + 1);
  return rounds_[static_cast<std::size_t>(r)];
}

int AbaNode::coin(std::int64_t r) {
  if (r == 1) return 0;
  if (r == 2) return 1;
  auto c = rt_.sim().coin(self(), route_tag(route_), r);
  return c.value_or(0);
}

void AbaNode::start(int input) {
  if (started_) return;
  started_ = true;
  est_ = input & 1;
  round_ = 1;
  send_est(1, est_);
  // Replay votes that arrived before the start.
  for (std::int64_t r = 1; r < static_cast<std::int64_t>(rounds_.size()); ++r)
    for (int b = 0; b < 2; ++b)
      if (!rounds_[r].est_from[b].empty()) on_est(r, b, -1);
  try_aux(round_);
  try_advance();
}

void AbaNode::send_est(std::int64_t r, int b) {
  Round& rd = round(r);
  if (rd.est_sent[b]) return;
  rd.est_sent[b] = true;
  Message m = make(MsgKind::kAbaEst);
  m.ints = {r, b};
  send_all(std::move(m));
}

void AbaNode::receive(PartyId from, const Message& m) {
  if (has_output_) return;
  if (m.kind == MsgKind::kAbaTerm) {
    if (m.ints.size() != 1 || (m.ints[0] != 0 && m.ints[0] != 1) || term_seen_.contains(from)) return;
    term_seen_.insert(from);
    const int b = static_cast<int>(m.ints[0]);
    term_from_[b].insert(from);
    if (!term_sent_ && !z_.contains(term_from_[b])) {
      term_sent_ = true;
      Message t = make(MsgKind::kAbaTerm);
      t.ints = {b};
      send_all(std::move(t));
    }
    if (z_.covers_complement(term_from_[b], everyone())) {
      has_output_ = true;
      output_ = b;
      output_time_ = now();
      probe("aba.output", {b, round_});
      rounds_.clear();
      if (on_output) on_output(b);
    }
    return;
  }
  if (m.ints.size() != 2) return;
  const std::int64_t r = m.ints[0];
  const std::int64_t b = m.ints[1];
  if (r < 1 || r > kMaxRound || (b != 0 && b != 1)) return;
  if (m.kind == MsgKind::kAbaEst) {
    Round& rd = round(r);
    if (rd.est_from[b].contains(from)) return;
    rd.est_from[b].insert(from);
    if (started_) on_est(r, static_cast<int>(b), from);
  } else if (m.kind == MsgKind::kAbaAux) {
    Round& rd = round(r);
    if (rd.aux_seen.contains(from)) return;
    rd.aux_seen.insert(from);
    rd.aux_from[b].insert(from);
    if (started_ && r == round_) try_advance();
  }
}

void AbaNode::on_est(std::int64_t r, int b, PartyId) {
  Round& rd = round(r);
  if (!rd.est_sent[b] && !z_.contains(rd.est_from[b])) send_est(r, b);
  if (!(rd.bin & (1 << b)) && z_.covers_complement(rd.est_from[b], everyone())) {
    rd.bin |= 1 << b;
    if (r == round_) {
      try_aux(r);
      try_advance();
    }
  }
}

void AbaNode::try_aux(std::int64_t r) {
  Round& rd = round(r);
  if (rd.aux_sent || rd.bin == 0) return;
  rd.aux_sent = true;
  Message m = make(MsgKind::kAbaAux);
  m.ints = {r, (rd.bin & 1) ? 0 : 1};
  send_all(std::move(m));
}

void AbaNode::try_advance() {
  while (!has_output_) {
    Round& rd = round(round_);
    if (!rd.aux_sent) return;
    int vals = 0;
    for (int b = 0; b < 2; ++b)
      if ((rd.bin & (1 << b)) && z_.covers_complement(rd.aux_from[b], everyone())) { vals = 1 << b; break; }
    if (vals == 0) {
      PartySet both;
      for (int b = 0; b < 2; ++b)
        if (rd.bin & (1 << b)) both |= rd.aux_from[b];
      if (rd.bin == 3 && z_.covers_complement(both, everyone()) && !rd.aux_from[0].empty() && !rd.aux_from[1].empty())
        vals = 3;
    }
    if (vals == 0) return;
    const int c = coin(round_);
    if (vals != 3) {
      const int v = vals == 1 ? 0 : 1;
      est_ = v;
      if (v == c && !decided_) {
        decided_ = true;
        probe("aba.decide", {v, round_});
        if (!term_sent_) {
          term_sent_ = true;
          Message t = make(MsgKind::kAbaTerm);
          t.ints = {v};
          send_all(std::move(t));
        }
      }
    } else {
      est_ = c;
    }
    if (round_ >= kMaxRound) return;
    ++round_;
    send_est(round_, est_);
    Round& nx = round(round_);
    for (int b = 0; b < 2; ++b)
      if (!nx.est_sent[b] && !z_.contains(nx.est_from[b])) send_est(round_, b);
    for (int b = 0; b < 2; ++b)
      if (!(nx.bin & (1 << b)) && z_.covers_complement(nx.est_from[b], everyone())) nx.bin |= 1 << b;
    try_aux(round_);
  }
}

}  // namespace bobw::proto
