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

#include "bobw/proto/mult.hpp"

#include "bobw/sim/strategy.hpp"

namespace bobw::proto {

namespace {
constexpr std::uint32_t kPairBase = 100000;
constexpr std::uint32_t kDiffBase = 200000;
constexpr std::uint32_t kOpenBase = 300000;
}  // namespace

MultNode::MultNode(Runtime& rt, Route route, int L, Tick anchor)
    : Node(rt, route), L_(L), anchor_(anchor) {
  const SharingSpec& sp = ctx().spec;
  const int q = sp.q();
  pairs_.resize(static_cast<std::size_t>(q) * q);
  slot_.assign(static_cast<std::size_t>(n()) * pairs_.size(), -1);
  count_.assign(n(), 0);
  for (int l = 0; l < q; ++l)
    for (int m = 0; m < q; ++m) {
      const int p = l * q + m;
      Pair& pr = pairs_[p];
      pr.l = l;
      pr.m = m;
      pr.q = sp.set(l) & sp.set(m);
      pr.q.for_each([&](PartyId j) { slot_[static_cast<std::size_t>(j) * pairs_.size() + p] = count_[j]++; });
      pr.acs = std::make_unique<AcsCore>(rt_, child_route(kPairBase + static_cast<std::uint32_t>(p)), pr.q, anchor_);
      pr.acs->on_output = [this, p](PartySet r) { on_subset(p, r); };
    }
  vss_.resize(n());
  for (PartyId j = 0; j < n(); ++j) {
    if (count_[j] == 0) continue;
    vss_[j] = std::make_unique<VssNode>(rt_, child_route(static_cast<std::uint32_t>(j)), j, count_[j] * L_, anchor_);
    vss_[j]->on_output = [this, j](const ShareBlock&) { on_vss(j); };
  }
  remaining_ = static_cast<int>(pairs_.size());
  c_ = ShareBlock(q, L_);
}

void MultNode::start(const ShareBlock& a, const ShareBlock& b) {
  a_ = a;
  b_ = b;
  if (count_[self()] == 0) return;
  std::vector<Fe> summands(static_cast<std::size_t>(count_[self()]) * L_);
  for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) {
    const int off = offset(self(), p);
    if (off < 0) continue;
    for (int x = 0; x < L_; ++x) summands[off + x] = field().mul(a.at(pairs_[p].l, x), b.at(pairs_[p].m, x));
  }
  vss_[self()]->start(summands);
}

void MultNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  const std::uint32_t key = next_key(m);
  if (key < static_cast<std::uint32_t>(n())) {
    if (vss_[key]) vss_[key]->receive(from, m);
    return;
  }
  const std::uint32_t np = static_cast<std::uint32_t>(pairs_.size());
  if (key >= kPairBase && key < kPairBase + np) {
    pairs_[key - kPairBase].acs->receive(from, m);
  } else if (key >= kDiffBase && key < kDiffBase + np) {
    if (auto& r = pairs_[key - kDiffBase].diff) r->receive(from, m);
    else stash_.hold(key, from, m);
  } else if (key >= kOpenBase && key < kOpenBase + np) {
    if (auto& r = pairs_[key - kOpenBase].open) r->receive(from, m);
    else stash_.hold(key, from, m);
  }
}

void MultNode::on_vss(PartyId j) {
  for (int p = 0; p < static_cast<int>(pairs_.size()); ++p)
    if (pairs_[p].q.contains(j)) pairs_[p].acs->vss_done(j);
}

ShareBlock MultNode::column_block(PartyId j, int p) const {
  const ShareBlock& out = vss_[j]->output();
  const int off = offset(j, p);
  ShareBlock b(out.q(), L_);
  for (int m = 0; m < out.q(); ++m)
    for (int x = 0; x < L_; ++x) b.at(m, x) = out.at(m, off + x);
  return b;
}

void MultNode::on_subset(int p, PartySet r) {
  Pair& pr = pairs_[p];
  pr.r = r;
  const auto members = r.members();
  if (members.size() <= 1) {
    settle(p, members.empty() ? ShareBlock(ctx().spec.q(), L_) : column_block(members[0], p));
    return;
  }
  const ShareBlock first = column_block(members[0], p);
  const int k = static_cast<int>(members.size()) - 1;
  ShareBlock diffs(first.q(), k * L_);
  for (int i = 0; i < k; ++i) {
    const ShareBlock other = column_block(members[i + 1], p);
    for (int m = 0; m < first.q(); ++m)
      for (int x = 0; x < L_; ++x) diffs.at(m, i * L_ + x) = field().sub(first.at(m, x), other.at(m, x));
  }
  pr.diff = std::make_unique<RecNode>(rt_, child_route(kDiffBase + static_cast<std::uint32_t>(p)),
                                      RecNode::all_sets(first.q()), k * L_);
  pr.diff->on_output = [this, p](const std::vector<std::vector<Fe>>&) { on_diff(p); };
  pr.diff->start_block(diffs);
  stash_.release(kDiffBase + static_cast<std::uint32_t>(p), [&](PartyId f, const Message& msg) { pr.diff->receive(f, msg); });
}

void MultNode::on_diff(int p) {
  Pair& pr = pairs_[p];
  bool zero = true;
  for (Fe v : pr.diff->sum()) zero = zero && v == 0;
  if (zero) {
    settle(p, column_block(pr.r.first(), p));
    return;
  }
  probe("mult.open", {pr.l, pr.m, static_cast<std::int64_t>(pr.r.bits())});
  opened_.push_back(p);
  pr.open = std::make_unique<RecNode>(rt_, child_route(kOpenBase + static_cast<std::uint32_t>(p)),
                                      std::vector<int>{pr.l, pr.m}, L_);
  pr.open->on_output = [this, p](const std::vector<std::vector<Fe>>&) { on_open(p); };
  std::vector<std::vector<Fe>> vals(2);
  vals[0].assign(a_.row(pr.l), a_.row(pr.l) + L_);
  vals[1].assign(b_.row(pr.m), b_.row(pr.m) + L_);
  pr.open->start(vals);
  stash_.release(kOpenBase + static_cast<std::uint32_t>(p), [&](PartyId f, const Message& msg) { pr.open->receive(f, msg); });
}

void MultNode::on_open(int p) {
  Pair& pr = pairs_[p];
  const auto& o = pr.open->output();
  ShareBlock s(ctx().spec.q(), L_);
  const bool first = ctx().spec.set(0).contains(self());
  for (int x = 0; x < L_; ++x) s.add_constant(field(), x, field().mul(o[0][x], o[1][x]), first);
  settle(p, std::move(s));
}

void MultNode::settle(int p, ShareBlock summand) {
  Pair& pr = pairs_[p];
  if (pr.done) return;
  pr.done = true;
  c_.axpy(field(), 1, summand);
  if (--remaining_ > 0) return;
  // Keep only rows this party holds.
  for (int m = 0; m < c_.q(); ++m)
    if (!ctx().spec.set(m).contains(self()))
      for (int x = 0; x < L_; ++x) c_.at(m, x) = 0;
  done_ = true;
  out_time_ = now();
  probe("mult.output", {});
  if (on_output) on_output(c_);
}

PreprocessingNode::PreprocessingNode(Runtime& rt, Route route, int count, Tick anchor)
    : Node(rt, route), count_(count), acs_(rt, child_route(0), PartySet::all(rt.ctx().n), 2 * count, anchor) {
  acs_.on_output = [this](PartySet cs, const std::vector<const ShareBlock*>& shares) {
    const int q = ctx().spec.q();
    a_ = ShareBlock(q, count_);
    b_ = ShareBlock(q, count_);
    cs.for_each([&](PartyId j) {
      for (int m = 0; m < q; ++m)
        for (int x = 0; x < count_; ++x) {
          a_.at(m, x) = field().add(a_.at(m, x), shares[j]->at(m, x));
          b_.at(m, x) = field().add(b_.at(m, x), shares[j]->at(m, count_ + x));
        }
    });
    mult_ = std::make_unique<MultNode>(rt_, child_route(1), count_, now());
    mult_->on_output = [this](const ShareBlock&) {
      done_ = true;
      out_time_ = now();
      if (on_output) on_output();
    };
    mult_->start(a_, b_);
    stash_.release(1, [&](PartyId f, const Message& msg) { mult_->receive(f, msg); });
  };
}

void PreprocessingNode::start() {
  std::vector<Fe> pairs(2 * static_cast<std::size_t>(count_));
  const sim::Strategy* st = rt_.strategy();
  for (Fe& v : pairs)
    v = st && st->spec().kind == sim::StrategyKind::kBiasedInput ? field().from_int(static_cast<std::int64_t>(st->spec().fixed_input))
                                                                 : field().random(rt_.rng());
  acs_.start(pairs);
}

void PreprocessingNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) return;
  const std::uint32_t key = next_key(m);
  if (key == 0) acs_.receive(from, m);
  else if (key == 1) {
    if (mult_) mult_->receive(from, m);
    else stash_.hold(1, from, m);
  }
}

}  // namespace bobw::proto
