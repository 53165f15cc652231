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

#include "bobw/proto/rec.hpp"

namespace bobw::proto {

RecNode::RecNode(Runtime& rt, Route route, std::vector<int> set_of, int L)
    : Node(rt, std::move(route)), set_of_(std::move(set_of)), L_(L), items_(set_of_.size()),
      unresolved_(static_cast<int>(set_of_.size())) {
  out_.resize(set_of_.size());
}

std::vector<int> RecNode::all_sets(int q) {
  std::vector<int> v(q);
  for (int m = 0; m < q; ++m) v[m] = m;
  return v;
}

void RecNode::start(const std::vector<std::vector<Fe>>& values) {
  const SharingSpec& spec = ctx().spec;
  for (std::size_t i = 0; i < set_of_.size(); ++i) {
    if (!spec.set(set_of_[i]).contains(self())) continue;
    Message m = make(MsgKind::kRecShare);
    m.ints = {static_cast<std::int64_t>(i)};
    m.elems.assign(values[i].begin(), values[i].end());
    send_all(std::move(m));
  }
  if (unresolved_ == 0 && !done_) {
    done_ = true;
    if (on_output) on_output(out_);
  }
}

void RecNode::start_block(const ShareBlock& block) {
  std::vector<std::vector<Fe>> values(set_of_.size());
  for (std::size_t i = 0; i < set_of_.size(); ++i) values[i].assign(block.row(set_of_[i]), block.row(set_of_[i]) + L_);
  start(values);
}

void RecNode::receive(PartyId from, const Message& m) {
  if (!for_me(m) || m.kind != MsgKind::kRecShare || m.ints.size() != 1) return;
  const std::int64_t i = m.ints[0];
  if (i < 0 || i >= static_cast<std::int64_t>(items_.size())) return;
  if (static_cast<int>(m.elems.size()) != L_) return;
  Item& it = items_[static_cast<std::size_t>(i)];
  const PartySet holders = ctx().spec.set(set_of_[static_cast<std::size_t>(i)]);
  if (it.resolved || !holders.contains(from) || it.seen.contains(from)) return;
  it.seen.insert(from);
  std::vector<Fe> v(m.elems.begin(), m.elems.end());
  PartySet* who = nullptr;
  for (auto& [val, set] : it.tally)
    if (val == v) who = &set;
  if (!who) {
    it.tally.emplace_back(v, PartySet{});
    who = &it.tally.back().second;
  }
  who->insert(from);
  if (!ctx().zs.covers_complement(*who, holders)) return;
  it.resolved = true;
  out_[static_cast<std::size_t>(i)] = std::move(v);
  it.tally.clear();
  if (--unresolved_ == 0 && !done_) {
    done_ = true;
    if (on_output) on_output(out_);
  }
}

std::vector<Fe> RecNode::sum() const {
  std::vector<Fe> s(static_cast<std::size_t>(L_), 0);
  for (const auto& row : out_)
    for (int l = 0; l < L_ && l < static_cast<int>(row.size()); ++l) s[l] = field().add(s[l], row[l]);
  return s;
}

BeaverNode::BeaverNode(Runtime& rt, Route route, int L)
    : Node(rt, route), L_(L), rec_(rt, child_route(0), RecNode::all_sets(rt.ctx().spec.q()), 2 * L) {
  rec_.on_output = [this](const std::vector<std::vector<Fe>>&) {
    const auto de = rec_.sum();
    const PrimeField& f = field();
    const bool first = ctx().spec.set(0).contains(self());
    w_ = c_;
    for (int l = 0; l < L_; ++l) {
      const Fe d = de[l], e = de[L_ + l];
      for (int m = 0; m < w_.q(); ++m)
        w_.at(m, l) = f.add(w_.at(m, l), f.add(f.mul(d, b_.at(m, l)), f.mul(e, a_.at(m, l))));
      w_.add_constant(f, l, f.mul(d, e), first);
    }
    done_ = true;
    if (on_output) on_output(w_);
  };
}

void BeaverNode::start(const ShareBlock& u, const ShareBlock& v, const ShareBlock& a, const ShareBlock& b,
                       const ShareBlock& c) {
  a_ = a;
  b_ = b;
  c_ = c;
  const PrimeField& f = field();
  ShareBlock de(u.q(), 2 * L_);
  for (int m = 0; m < u.q(); ++m)
    for (int l = 0; l < L_; ++l) {
      de.at(m, l) = f.sub(u.at(m, l), a.at(m, l));
      de.at(m, L_ + l) = f.sub(v.at(m, l), b.at(m, l));
    }
  rec_.start_block(de);
}

}  // namespace bobw::proto
