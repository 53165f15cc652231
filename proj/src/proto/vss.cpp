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

#include "bobw/proto/vss.hpp"

namespace bobw::proto {

bool is_clique(PartySet c, const EdgeFn& edge) {
  const auto members = c.members();
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (!edge(members[x], members[y])) return false;
  return true;
}

std::optional<PartySet> find_core(PartySet sm, const AdversaryStructure& z, const EdgeFn& edge) {
  for (PartySet zz : z.sets()) {
    const PartySet c = sm - zz;
    if (is_clique(c, edge)) return c;
  }
  // An empty structure still admits Z = {}.
  if (z.size() == 0 && is_clique(sm, edge)) return sm;
  return std::nullopt;
}

namespace {

constexpr std::uint32_t kind_of(std::uint32_t key) { return key >> 28; }
constexpr int field_a(std::uint32_t key) { return static_cast<int>((key >> 16) & 0xFFFU); }
constexpr int field_b(std::uint32_t key) { return static_cast<int>((key >> 8) & 0xFFU); }
constexpr int field_c(std::uint32_t key) { return static_cast<int>(key & 0xFFU); }

Blob sets_blob(const std::vector<PartySet>& sets) {
  Blob b;
  for (PartySet s : sets) b.push_back(s.bits());
  return b;
}

}  // namespace

VssNode::VssNode(Runtime& rt, Route route, PartyId dealer, int L, Tick anchor)
    : Node(rt, route),
      dealer_(dealer),
      L_(L),
      anchor_(anchor),
      t_(rt.ctx().timing),
      ba_(rt, child_route(pack_key(kBa)), rt.ctx().zs) {
  const int q = spec().q();
  own_ = ShareBlock(q, L_);
  out_ = ShareBlock(q, L_);
  has_own_.assign(q, 0);
  share_at_.assign(q, -1);
  recv_.assign(static_cast<std::size_t>(q) * n() * L_, 0);
  recv_from_.assign(q, PartySet{});
  frozen_from_.assign(q, PartySet{});
  ok_sent_.assign(ctx().ok_batching ? 1 : q, PartySet{});
  nok_sent_.assign(q, 0);
  ok_.assign(ctx().ok_batching ? n() : static_cast<std::size_t>(q) * n(), PartySet{});
  nok_regular_.assign(q, PartySet{});
  dealer_res_.assign(q, std::nullopt);
  res_.assign(q, std::vector<std::optional<std::vector<Fe>>>(n()));
  rule_.assign(q, 0);
  pending_ = static_cast<int>(spec().held_by(self()).size());

  ba_.on_output = [this](int) { proceed(); };
  const Tick d = delta();
  open_bc(pack_key(kCore), dealer_, anchor_ + 2 * d + t_.bc());
  at(anchor_ + 2 * d, [this] { freeze_evidence(); });
  at(anchor_ + 2 * d + t_.bc(), [this] { resolve_step(); });
  at(anchor_ + 2 * d + 2 * t_.bc(), [this] { accept_step(); });
  at(anchor_ + t_.vss(), [this] {
    time_reached_ = true;
    auto gated = std::move(gated_);
    gated_.clear();
    for (auto& [from, m] : gated) receive(from, *m);
    proceed();
  });
}

bool VssNode::same(const Fe* a, const Fe* b) const {
  for (int l = 0; l < L_; ++l)
    if (a[l] != b[l]) return false;
  return true;
}

bool VssNode::edge(int m, PartyId i, PartyId j) const {
  if (ctx().ok_batching) return ok_[i].contains(j) && ok_[j].contains(i);
  const std::size_t base = static_cast<std::size_t>(m) * n();
  return ok_[base + i].contains(j) && ok_[base + j].contains(i);
}

bool VssNode::snap_edge(int m, PartyId i, PartyId j) const {
  if (ctx().ok_batching) return ok_snap_[i].contains(j) && ok_snap_[j].contains(i);
  const std::size_t base = static_cast<std::size_t>(m) * n();
  return ok_snap_[base + i].contains(j) && ok_snap_[base + j].contains(i);
}

void VssNode::start(const std::vector<Fe>& secrets) {
  if (self() != dealer_) return;
  const int q = spec().q();
  dealt_ = ShareBlock(q, L_);
  for (int l = 0; l < L_; ++l) {
    const SecretSharing sh = share(secrets.at(l), spec(), field(), rt_.rng());
    for (int m = 0; m < q; ++m) dealt_.at(m, l) = sh.shares[m];
  }
  for (int m = 0; m < q; ++m) {
    Message msg = make(MsgKind::kVssShare);
    msg.ints = {m};
    msg.elems.assign(dealt_.row(m), dealt_.row(m) + L_);
    send_to(spec().set(m), std::move(msg));
  }
}

void VssNode::receive(PartyId from, const Message& m) {
  if (for_me(m)) {
    if (m.ints.size() != 1 || static_cast<int>(m.elems.size()) != L_) return;
    const std::int64_t idx = m.ints[0];
    if (idx < 0 || idx >= spec().q()) return;
    if (m.kind == MsgKind::kVssShare && from == dealer_) on_share(static_cast<int>(idx), m);
    else if (m.kind == MsgKind::kVssPcheck) on_pcheck(from, static_cast<int>(idx), m);
    return;
  }
  const std::uint32_t key = next_key(m);
  if (key == pack_key(kBa)) ba_.receive(from, m);
  else route_bc(from, key, m);
}

BcNode* VssNode::open_bc(std::uint32_t key, PartyId sender, Tick anchor) {
  if (BcNode* b = bc(key)) return b;
  auto node = std::make_unique<BcNode>(rt_, child_route(key), ctx().zs, sender, anchor);
  BcNode* b = node.get();
  const int a = field_a(key), i = field_b(key), j = field_c(key);
  switch (kind_of(key)) {
    case kOk:
      b->on_output = [this, i, j](const ValuePtr& v, bool) {
        if (!v || *v != Blob{1}) return;
        ok_[i].insert(j);
        on_graph_change();
      };
      break;
    case kOkSet:
      b->on_output = [this, a, i, j](const ValuePtr& v, bool) {
        if (!v || *v != Blob{1}) return;
        ok_[static_cast<std::size_t>(a) * n() + i].insert(j);
        on_graph_change();
      };
      break;
    case kNok:
      b->on_regular = [this, a, i](const ValuePtr& v) {
        if (v && !nok_frozen_ && spec().set(a).contains(i)) nok_regular_[a].insert(i);
      };
      break;
    case kRes:
      b->on_regular = [this, a, i](const ValuePtr& v) {
        if (v && !resolve_frozen_ && static_cast<int>(v->size()) == L_) res_[a][i] = std::vector<Fe>(v->begin(), v->end());
      };
      break;
    case kDealerRes:
      b->on_regular = [this, a](const ValuePtr& v) {
        if (v && !resolve_frozen_ && static_cast<int>(v->size()) == L_) dealer_res_[a] = std::vector<Fe>(v->begin(), v->end());
      };
      break;
    case kCore:
      b->on_output = [this](const ValuePtr& v, bool) {
        if (!v || static_cast<int>(v->size()) != spec().q()) return;
        std::vector<PartySet> c;
        for (std::uint64_t w : *v) c.emplace_back(w);
        core_c_ = std::move(c);
        try_shares_c();
      };
      break;
    case kCoreE:
      b->on_output = [this](const ValuePtr& v, bool) {
        if (!v || static_cast<int>(v->size()) != spec().q()) return;
        std::vector<PartySet> e;
        for (std::uint64_t w : *v) e.emplace_back(w);
        core_e_ = std::move(e);
        try_shares_e();
      };
      break;
    default: break;
  }
  return bcs_.put(key, std::move(node));
}

void VssNode::route_bc(PartyId from, std::uint32_t key, const Message& m) {
  if (BcNode* b = bc(key)) {
    b->receive(from, m);
    return;
  }
  if (m.ints.empty()) return;
  const int q = spec().q();
  const int a = field_a(key), i = field_b(key), j = field_c(key);
  PartyId sender = -1;
  switch (kind_of(key)) {
    case kOk:
      if (a == 0 && i < n() && j < n() && i != j) sender = i;
      break;
    case kOkSet:
      if (a < q && i < n() && j < n() && i != j) sender = i;
      break;
    case kNok:
    case kRes:
      if (a < q && i < n()) sender = i;
      break;
    case kDealerRes:
      if (a < q) sender = dealer_;
      break;
    case kCoreE:
      if (!time_reached_) {
        gated_.emplace_back(from, std::make_shared<const Message>(m));
        return;
      }
      sender = dealer_;
      break;
    default: break;
  }
  if (sender < 0) return;
  const Tick anchor = std::clamp<Tick>(m.ints[0], 0, now());
  open_bc(key, sender, anchor)->receive(from, m);
}

void VssNode::broadcast(std::uint32_t key, Blob value) {
  open_bc(key, self(), now())->start(sim::make_value(std::move(value)));
}

void VssNode::on_share(int m, const Message& msg) {
  if (!holds(m) || has_own_[m]) return;
  has_own_[m] = 1;
  share_at_[m] = now();
  std::copy(msg.elems.begin(), msg.elems.end(), own_.row(m));
  probe("vss.share", {m});
  const Tick d = delta();
  const Tick tm = (now() + d - 1) / d * d;
  at(tm, [this, m] {
    Message p = make(MsgKind::kVssPcheck);
    p.ints = {m};
    p.elems.assign(own_.row(m), own_.row(m) + L_);
    send_to(spec().set(m), std::move(p));
  });
  schedule_eval();
  if (proceeded_) try_shares_e();
}

void VssNode::on_pcheck(PartyId from, int m, const Message& msg) {
  if (!holds(m) || !spec().set(m).contains(from) || recv_from_[m].contains(from)) return;
  recv_from_[m].insert(from);
  std::copy(msg.elems.begin(), msg.elems.end(), recv_.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(m) * n() + from) * L_));
  schedule_eval();
  if (proceeded_ && !done_) {
    try_shares_c();
    try_shares_e();
  }
}

void VssNode::schedule_eval() {
  const Tick d = delta();
  const Tick tm = (now() + d - 1) / d * d;
  if (eval_at_ == tm) return;
  eval_at_ = tm;
  at(tm, [this] {
    eval_at_ = -1;
    evaluate();
  });
}

void VssNode::evaluate() {
  const SharingSpec& sp = spec();
  for (int m : sp.held_by(self())) {
    if (nok_sent_[m] || recv_from_[m].empty()) continue;
    bool bad = false;
    const Fe* first = recv(m, recv_from_[m].first());
    recv_from_[m].for_each([&](PartyId j) {
      if (!same(first, recv(m, j))) bad = true;
      if (has_own_[m] && !same(own_.row(m), recv(m, j))) bad = true;
    });
    if (bad) {
      nok_sent_[m] = 1;
      broadcast(pack_key(kNok, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(self())), Blob{1});
    }
  }
  if (ctx().ok_batching) {
    for (PartyId j = 0; j < n(); ++j) {
      if (j == self() || ok_sent_[0].contains(j)) continue;
      bool any = false, good = true;
      for (int m : sp.held_by(self())) {
        if (!sp.set(m).contains(j)) continue;
        any = true;
        if (!has_own_[m] || !recv_from_[m].contains(j) || !same(own_.row(m), recv(m, j))) { good = false; break; }
      }
      if (any && good) {
        ok_sent_[0].insert(j);
        broadcast(pack_key(kOk, 0, static_cast<std::uint32_t>(self()), static_cast<std::uint32_t>(j)), Blob{1});
      }
    }
  } else {
    for (int m : sp.held_by(self())) {
      if (!has_own_[m]) continue;
      recv_from_[m].for_each([&](PartyId j) {
        if (j == self() || ok_sent_[m].contains(j) || !same(own_.row(m), recv(m, j))) return;
        ok_sent_[m].insert(j);
        broadcast(pack_key(kOkSet, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(self()),
                           static_cast<std::uint32_t>(j)),
                  Blob{1});
      });
    }
  }
}

void VssNode::on_graph_change() {
  if (!proceeded_ || ba_.output() != 0) return;
  try_find_e();
  try_shares_e();
}

void VssNode::freeze_evidence() { frozen_from_ = recv_from_; }

void VssNode::resolve_step() {
  nok_frozen_ = true;
  ok_snap_ = ok_;
  for (int m = 0; m < spec().q(); ++m) {
    if (nok_regular_[m].empty()) continue;
    if (holds(m) && has_own_[m])
      broadcast(pack_key(kRes, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(self())),
                Blob(own_.row(m), own_.row(m) + L_));
    if (self() == dealer_ && dealt_.q() > 0)
      broadcast(pack_key(kDealerRes, static_cast<std::uint32_t>(m)), Blob(dealt_.row(m), dealt_.row(m) + L_));
  }
  if (self() != dealer_) return;
  std::vector<PartySet> cores;
  for (int m = 0; m < spec().q(); ++m) {
    auto c = find_core(spec().set(m), ctx().zs, [&](PartyId i, PartyId j) { return edge(m, i, j); });
    if (!c) return;
    cores.push_back(*c);
  }
  bc(pack_key(kCore))->start(sim::make_value(sets_blob(cores)));
}

bool VssNode::c_sets_valid(const std::vector<PartySet>& c, bool snapshot, const AdversaryStructure& z) const {
  if (static_cast<int>(c.size()) != spec().q()) return false;
  for (int m = 0; m < spec().q(); ++m) {
    const PartySet sm = spec().set(m);
    if (!c[m].subset_of(sm) || !z.contains(sm - c[m])) return false;
    const bool clique = snapshot ? is_clique(c[m], [&](PartyId i, PartyId j) { return snap_edge(m, i, j); })
                                 : is_clique(c[m], [&](PartyId i, PartyId j) { return edge(m, i, j); });
    if (!clique) return false;
  }
  return true;
}

void VssNode::accept_step() {
  resolve_frozen_ = true;
  bool accept = false;
  const ValuePtr& v = bc(pack_key(kCore))->regular();
  if (v && static_cast<int>(v->size()) == spec().q()) {
    std::vector<PartySet> c;
    for (std::uint64_t w : *v) c.emplace_back(w);
    accept = c_sets_valid(c, true, ctx().zs);
    for (int m = 0; accept && m < spec().q(); ++m) {
      if (nok_regular_[m].empty()) continue;
      if (!dealer_res_[m]) { accept = false; break; }
      PartySet agree;
      c[m].for_each([&](PartyId j) {
        if (res_[m][j] && *res_[m][j] == *dealer_res_[m]) agree.insert(j);
      });
      accept = ctx().zs.contains(c[m] - agree);
    }
  }
  probe("vss.accept", {accept ? 1 : 0});
  ba_.start(accept ? 1 : 0);
}

void VssNode::proceed() {
  if (proceeded_ || !time_reached_ || !ba_.has_output()) return;
  proceeded_ = true;
  probe("vss.ba", {ba_.output()});
  if (ba_.output() == 1) {
    try_shares_c();
  } else {
    try_find_e();
    try_shares_e();
  }
}

namespace {

// A value held by a subset `who` of `cands` such that base \ who is in z.
template <typename Get>
const Fe* common_value(PartySet cands, PartySet base, const AdversaryStructure& z, int L, Get get) {
  const Fe* found = nullptr;
  cands.for_each([&](PartyId j) {
    if (found) return;
    const Fe* v = get(j);
    PartySet who;
    cands.for_each([&](PartyId k) {
      if (std::equal(v, v + L, get(k))) who.insert(k);
    });
    if (z.contains(base - who)) found = v;
  });
  return found;
}

}  // namespace

void VssNode::try_shares_c() {
  if (done_ || !proceeded_ || ba_.output() != 1 || !core_c_) return;
  auto get = [&](int m) { return [this, m](PartyId j) { return recv(m, j); }; };
  for (int m : spec().held_by(self())) {
    if (rule_[m]) continue;
    const PartySet c = (*core_c_)[m] & spec().set(m);
    const Fe* value = nullptr;
    char rule = 0;
    if (dealer_res_[m]) {
      PartySet agree;
      c.for_each([&](PartyId j) {
        if (res_[m][j] && *res_[m][j] == *dealer_res_[m]) agree.insert(j);
      });
      if (ctx().zs.contains(c - agree)) { value = dealer_res_[m]->data(); rule = 'A'; }
    }
    if (!value && (value = common_value(c & frozen_from_[m], c, ctx().zs, L_, get(m)))) rule = 'B';
    if (!value && (value = common_value(c & recv_from_[m], c, ctx().za, L_, get(m)))) rule = 'C';
    if (!value) continue;
    std::copy(value, value + L_, out_.row(m));
    rule_[m] = rule;
    --pending_;
  }
  if (pending_ == 0) finish();
}

void VssNode::try_find_e() {
  if (self() != dealer_ || e_broadcast_ || !proceeded_ || ba_.output() != 0) return;
  std::vector<PartySet> cores;
  for (int m = 0; m < spec().q(); ++m) {
    auto e = find_core(spec().set(m), ctx().za, [&](PartyId i, PartyId j) { return edge(m, i, j); });
    if (!e) return;
    cores.push_back(*e);
  }
  e_broadcast_ = true;
  broadcast(pack_key(kCoreE), sets_blob(cores));
}

void VssNode::try_shares_e() {
  if (done_ || !proceeded_ || ba_.output() != 0 || !core_e_) return;
  const auto& e = *core_e_;
  if (!e_accepted_) {
    for (int m = 0; m < spec().q(); ++m) {
      const PartySet sm = spec().set(m);
      if (!e[m].subset_of(sm) || !ctx().za.contains(sm - e[m])) return;
      if (!is_clique(e[m], [&](PartyId i, PartyId j) { return edge(m, i, j); })) return;
    }
    e_accepted_ = true;
    probe("vss.e_accept", {});
  }
  for (int m : spec().held_by(self())) {
    if (rule_[m]) continue;
    if (e[m].contains(self())) {
      if (!has_own_[m]) continue;
      std::copy(own_.row(m), own_.row(m) + L_, out_.row(m));
      rule_[m] = 'E';
      --pending_;
      continue;
    }
    const Fe* value = common_value(e[m] & recv_from_[m], e[m], ctx().zs, L_, [this, m](PartyId j) { return recv(m, j); });
    if (!value) continue;
    std::copy(value, value + L_, out_.row(m));
    rule_[m] = 'F';
    --pending_;
  }
  if (pending_ == 0) finish();
}

void VssNode::finish() {
  if (done_) return;
  done_ = true;
  out_time_ = now();
  probe("vss.output", {});
  if (on_output) on_output(out_);
}

}  // namespace bobw::proto
