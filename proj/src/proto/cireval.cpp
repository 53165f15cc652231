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

#include "bobw/proto/cireval.hpp"

namespace bobw::proto {

namespace {
constexpr std::uint32_t kInputKey = 0;
constexpr std::uint32_t kPreKey = 1;
constexpr std::uint32_t kOutKey = 2;
constexpr std::uint32_t kLevelBase = 16;
}  // namespace

CirEvalNode::CirEvalNode(Runtime& rt, Route route, const Circuit& circuit, Tick anchor)
    : Node(rt, route), circuit_(circuit), inputs_(rt, child_route(kInputKey), PartySet::all(rt.ctx().n), 1, anchor) {
  if (circuit_.mul_count() > 0) {
    pre_ = std::make_unique<PreprocessingNode>(rt_, child_route(kPreKey), circuit_.mul_count(), anchor);
    pre_->on_output = [this] { try_evaluate(); };
  }
  inputs_.on_output = [this](PartySet, const std::vector<const ShareBlock*>&) { try_evaluate(); };
  levels_.resize(static_cast<std::size_t>(circuit_.mul_depth()));
}

void CirEvalNode::start(Fe input) {
  const sim::Strategy* st = rt_.strategy();
  if (st && st->spec().kind == sim::StrategyKind::kBiasedInput) input = field().from_int(static_cast<std::int64_t>(st->spec().fixed_input));
  inputs_.start({input});
  if (pre_) pre_->start();
}

void CirEvalNode::receive(PartyId from, const Message& m) {
  if (done_) return;
  if (for_me(m)) {
    if (m.kind == MsgKind::kReady && m.elems.size() == 1) on_ready(from, m.elems[0]);
    return;
  }
  const std::uint32_t key = next_key(m);
  if (key == kInputKey) {
    inputs_.receive(from, m);
  } else if (key == kPreKey) {
    if (pre_) pre_->receive(from, m);
  } else if (key == kOutKey) {
    if (out_rec_) out_rec_->receive(from, m);
    else stash_.hold(key, from, m);
  } else if (key >= kLevelBase && key < kLevelBase + levels_.size()) {
    if (auto& lv = levels_[key - kLevelBase]) lv->receive(from, m);
    else stash_.hold(key, from, m);
  }
}

void CirEvalNode::try_evaluate() {
  if (evaluating_ || !inputs_.has_output() || (pre_ && !pre_->has_output())) return;
  evaluating_ = true;
  const auto& gates = circuit_.gates();
  wire_.assign(gates.size(), ShareBlock(ctx().spec.q(), 1));
  ready_.assign(gates.size(), 0);
  probe("cireval.eval", {static_cast<std::int64_t>(inputs_.cs().bits())});
  run_linear();
  if (circuit_.mul_depth() > 0) start_level(0);
  else open_output();
}

void CirEvalNode::run_linear() {
  const auto& gates = circuit_.gates();
  const PrimeField& f = field();
  const bool first = ctx().spec.set(0).contains(self());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (ready_[i]) continue;
    const Gate& g = gates[i];
    if ((g.a >= 0 && !ready_[g.a]) || (g.b >= 0 && !ready_[g.b]) || g.op == Gate::Op::kMul) continue;
    ShareBlock& w = wire_[i];
    switch (g.op) {
      case Gate::Op::kInput:
        if (inputs_.cs().contains(g.party)) w = inputs_.shares(g.party).column(0);
        break;
      case Gate::Op::kConst: w.add_constant(f, 0, f.from_int(g.c), first); break;
      case Gate::Op::kAdd:
        w = wire_[g.a];
        w.axpy(f, 1, wire_[g.b]);
        break;
      case Gate::Op::kCMul: w.axpy(f, f.from_int(g.c), wire_[g.a]); break;
      case Gate::Op::kCAdd:
        w = wire_[g.a];
        w.add_constant(f, 0, f.from_int(g.c), first);
        break;
      case Gate::Op::kMul: break;
    }
    ready_[i] = 1;
  }
}

void CirEvalNode::start_level(int level) {
  const auto& ids = circuit_.levels()[static_cast<std::size_t>(level)];
  const int L = static_cast<int>(ids.size());
  const int q = ctx().spec.q();
  ShareBlock u(q, L), v(q, L), a(q, L), b(q, L), c(q, L);
  for (int x = 0; x < L; ++x) {
    const Gate& g = circuit_.gates()[static_cast<std::size_t>(ids[x])];
    for (int m = 0; m < q; ++m) {
      u.at(m, x) = wire_[g.a].at(m, 0);
      v.at(m, x) = wire_[g.b].at(m, 0);
      a.at(m, x) = pre_->a().at(m, g.mul_index);
      b.at(m, x) = pre_->b().at(m, g.mul_index);
      c.at(m, x) = pre_->c().at(m, g.mul_index);
    }
  }
  const std::uint32_t key = kLevelBase + static_cast<std::uint32_t>(level);
  auto& node = levels_[static_cast<std::size_t>(level)];
  node = std::make_unique<BeaverNode>(rt_, child_route(key), L);
  node->on_output = [this, level, ids](const ShareBlock& w) {
    for (int x = 0; x < static_cast<int>(ids.size()); ++x) {
      wire_[ids[x]] = w.column(x);
      ready_[ids[x]] = 1;
    }
    run_linear();
    if (level + 1 < circuit_.mul_depth()) start_level(level + 1);
    else open_output();
  };
  node->start(u, v, a, b, c);
  stash_.release(key, [&](PartyId f, const Message& msg) { node->receive(f, msg); });
}

void CirEvalNode::open_output() {
  out_rec_ = std::make_unique<RecNode>(rt_, child_route(kOutKey), RecNode::all_sets(ctx().spec.q()), 1);
  out_rec_->on_output = [this](const std::vector<std::vector<Fe>>&) { send_ready(out_rec_->sum()[0]); };
  out_rec_->start_block(wire_[static_cast<std::size_t>(circuit_.output())]);
  stash_.release(kOutKey, [&](PartyId f, const Message& msg) { out_rec_->receive(f, msg); });
}

void CirEvalNode::send_ready(Fe y) {
  if (ready_sent_) return;
  ready_sent_ = true;
  probe("cireval.ready", {static_cast<std::int64_t>(y)});
  Message m = make(MsgKind::kReady);
  m.elems = {y};
  send_all(std::move(m));
}

void CirEvalNode::on_ready(PartyId from, Fe y) {
  if (ready_seen_.contains(from)) return;
  ready_seen_.insert(from);
  PartySet* who = nullptr;
  for (auto& [v, s] : ready_from_)
    if (v == y) who = &s;
  if (!who) {
    ready_from_.emplace_back(y, PartySet{});
    who = &ready_from_.back().second;
  }
  who->insert(from);
  const PartySet got = *who;
  if (!ctx().zs.contains(got)) send_ready(y);
  if (!ctx().zs.covers_complement(got, everyone())) return;
  done_ = true;
  y_ = y;
  out_time_ = now();
  probe("cireval.output", {static_cast<std::int64_t>(y)});
  if (on_output) on_output(y);
  rt_.halt();
}

}  // namespace bobw::proto
