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

#include "bobw/runner.hpp"

#include "bobw/proto/acs.hpp"
#include "bobw/proto/cireval.hpp"
#include "bobw/proto/mult.hpp"
#include "bobw/proto/rec.hpp"
#include "bobw/proto/vss.hpp"

namespace bobw {

using namespace proto;

Harness::Harness(const Context& ctx, const RunOptions& opt)
    : ctx_(ctx), corrupt_(opt.corrupt), sim_(std::make_unique<sim::Simulator>(ctx.n, opt.net, opt.seed)), trace_(opt.trace) {
  sim::NetConfig net = opt.net;
  net.delta = ctx.delta();
  sim_ = std::make_unique<sim::Simulator>(ctx.n, net, opt.seed);
  corrupt_.for_each([&](PartyId p) { sim_->corrupt(p, std::make_shared<sim::Strategy>(opt.strategy, ctx.n, ctx.field)); });
  sim_->enable_trace(opt.trace);
  sim_->enable_probes(opt.probes);
  if (opt.observer) sim_->on_deliver(opt.observer);
  for (PartyId p = 0; p < ctx.n; ++p) {
    rts_.push_back(std::make_unique<Runtime>(ctx_, *sim_, p));
    rts_.back()->set_root(std::make_unique<HostNode>(*rts_.back()));
  }
}

Harness::~Harness() {
  rts_.clear();
  sim_.reset();
}

RunInfo Harness::run() {
  sim_->run();
  RunInfo info;
  info.timed_out = sim_->timed_out();
  info.end = sim_->last_event_time();
  info.stats = sim_->stats();
  info.trace_hash = sim_->trace_hash();
  if (trace_) info.trace = sim_->trace();
  info.probes = sim_->probes();
  return info;
}

Context single_structure_context(const AdversaryStructure& z, Tick delta) {
  return Context(z, AdversaryStructure(z.n(), {}, "none"), PrimeField(), delta);
}

namespace {

template <typename R>
void fill(R& r, RunInfo info) {
  static_cast<RunInfo&>(r) = std::move(info);
}

ShareBlock view_block(const Context& ctx, PartyId p, const std::vector<SecretSharing>& sh) {
  const int L = static_cast<int>(sh.size());
  ShareBlock b(ctx.spec.q(), L);
  for (int m : ctx.spec.held_by(p))
    for (int l = 0; l < L; ++l) b.at(m, l) = sh[l].shares[m];
  return b;
}

}  // namespace

AcastResult run_acast(const AdversaryStructure& z, PartyId sender, ValuePtr m, const RunOptions& opt) {
  const Context ctx = single_structure_context(z, opt.net.delta);
  AcastResult r;
  r.out.resize(z.n());
  Harness h(ctx, opt);
  for (PartyId p = 0; p < z.n(); ++p) {
    auto& node = h.install<AcastNode>(p, ctx.zs, sender);
    node.on_output = [&r, &h, p](const ValuePtr& v) { r.out[p] = {true, v, h.sim().now()}; };
    if (p == sender) h.at(p, 0, [&node, m] { node.start(m); });
  }
  fill(r, h.run());
  return r;
}

SbaResult run_sba(const AdversaryStructure& z, const std::vector<ValuePtr>& inputs, const RunOptions& opt) {
  const Context ctx = single_structure_context(z, opt.net.delta);
  SbaResult r;
  r.out.resize(z.n());
  Harness h(ctx, opt);
  for (PartyId p = 0; p < z.n(); ++p) {
    auto& node = h.install<SbaNode>(p, ctx.zs, default_kings(z.n()));
    node.on_output = [&r, &h, p](const ValuePtr& v) { r.out[p] = {true, v, h.sim().now()}; };
    h.at(p, 0, [&node, v = inputs[p]] { node.start(0, v); });
  }
  fill(r, h.run());
  return r;
}

BcResult run_bc(const AdversaryStructure& z, PartyId sender, ValuePtr m, const RunOptions& opt, Tick sender_start) {
  const Context ctx = single_structure_context(z, opt.net.delta);
  BcResult r;
  r.out.resize(z.n());
  Harness h(ctx, opt);
  for (PartyId p = 0; p < z.n(); ++p) {
    auto& node = h.install<BcNode>(p, ctx.zs, sender, 0);
    node.on_regular = [&r, &h, p](const ValuePtr& v) {
      r.out[p].regular_done = true;
      r.out[p].regular = v;
      r.out[p].regular_time = h.sim().now();
    };
    node.on_output = [&r, &h, p](const ValuePtr& v, bool fb) {
      r.out[p].has = true;
      r.out[p].value = v;
      r.out[p].fallback = fb;
      r.out[p].time = h.sim().now();
    };
    if (p == sender) h.at(p, sender_start, [&node, m] { node.start(m); });
  }
  fill(r, h.run());
  return r;
}

BitResult run_aba(const AdversaryStructure& z, const std::vector<int>& inputs, const RunOptions& opt) {
  const Context ctx = single_structure_context(z, opt.net.delta);
  BitResult r;
  r.out.resize(z.n());
  Harness h(ctx, opt);
  for (PartyId p = 0; p < z.n(); ++p) {
    auto& node = h.install<AbaNode>(p, ctx.zs);
    node.on_output = [&r, &h, p](int b) { r.out[p] = {true, b, h.sim().now()}; };
    h.at(p, 0, [&node, b = inputs[p]] { node.start(b); });
  }
  fill(r, h.run());
  return r;
}

BitResult run_ba(const AdversaryStructure& z, const std::vector<int>& inputs, const RunOptions& opt) {
  const Context ctx = single_structure_context(z, opt.net.delta);
  BitResult r;
  r.out.resize(z.n());
  r.vstar.assign(z.n(), -1);
  Harness h(ctx, opt);
  std::vector<BaNode*> nodes;
  for (PartyId p = 0; p < z.n(); ++p) {
    auto& node = h.install<BaNode>(p, ctx.zs);
    nodes.push_back(&node);
    node.on_output = [&r, &h, p](int b) { r.out[p] = {true, b, h.sim().now()}; };
    h.at(p, 0, [&node, b = inputs[p]] { node.start(b); });
  }
  fill(r, h.run());
  for (PartyId p = 0; p < z.n(); ++p) r.vstar[p] = nodes[p]->vstar();
  return r;
}

VecResult run_rec(const Context& ctx, const std::vector<SecretSharing>& sharings, const RunOptions& opt) {
  VecResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  const int L = static_cast<int>(sharings.size());
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<RecNode>(p, RecNode::all_sets(ctx.spec.q()), L);
    node.on_output = [&r, &h, &node, p](const std::vector<std::vector<Fe>>&) { r.out[p] = {true, node.sum(), h.sim().now()}; };
    h.at(p, 0, [&node, b = view_block(ctx, p, sharings)] { node.start_block(b); });
  }
  fill(r, h.run());
  return r;
}

BeaverResult run_beaver(const Context& ctx, const std::vector<SecretSharing>& u, const std::vector<SecretSharing>& v,
                        const std::vector<SecretSharing>& a, const std::vector<SecretSharing>& b,
                        const std::vector<SecretSharing>& c, const RunOptions& opt) {
  BeaverResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  const int L = static_cast<int>(u.size());
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<BeaverNode>(p, L);
    node.on_output = [&r, &h, p](const ShareBlock& w) { r.out[p] = {true, w, h.sim().now()}; };
    h.at(p, 0, [&node, &ctx, p, &u, &v, &a, &b, &c] {
      node.start(view_block(ctx, p, u), view_block(ctx, p, v), view_block(ctx, p, a), view_block(ctx, p, b),
                 view_block(ctx, p, c));
    });
  }
  fill(r, h.run());
  return r;
}

VssResult run_vss(const Context& ctx, PartyId dealer, const std::vector<Fe>& secrets, const RunOptions& opt) {
  VssResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  const int L = static_cast<int>(secrets.size());
  std::vector<VssNode*> nodes;
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<VssNode>(p, dealer, L, 0);
    nodes.push_back(&node);
    node.on_output = [&r, &h, p](const ShareBlock& s) {
      r.out[p].has = true;
      r.out[p].shares = s;
      r.out[p].time = h.sim().now();
    };
  }
  h.at(dealer, 0, [&node = *nodes[dealer], &secrets] { node.start(secrets); });
  fill(r, h.run());
  const ShareBlock& dealt = nodes[dealer]->dealt();
  for (int l = 0; l < L && dealt.q() > 0; ++l) {
    SecretSharing s;
    for (int m = 0; m < ctx.spec.q(); ++m) s.shares.push_back(dealt.at(m, l));
    r.dealt.push_back(s);
  }
  for (PartyId p = 0; p < ctx.n; ++p) {
    r.out[p].ba = nodes[p]->ba_output();
    r.out[p].rule = nodes[p]->rules();
    if (nodes[p]->core_c()) r.out[p].core = *nodes[p]->core_c();
    for (int m = 0; m < ctx.spec.q(); ++m) r.out[p].share_time.push_back(nodes[p]->share_time(m));
  }
  return r;
}

AcsResult run_acs(const Context& ctx, PartySet q, const std::vector<std::vector<Fe>>& inputs, const RunOptions& opt) {
  AcsResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  const int L = inputs.empty() ? 1 : static_cast<int>(inputs[0].size());
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<AcsNode>(p, q, L, 0);
    node.on_output = [&r, &h, p](PartySet cs, const std::vector<const ShareBlock*>& shares) {
      AcsOut& o = r.out[p];
      o.has = true;
      o.cs = cs;
      o.time = h.sim().now();
      o.shares.resize(shares.size());
      for (std::size_t j = 0; j < shares.size(); ++j)
        if (shares[j]) o.shares[j] = *shares[j];
    };
    h.at(p, 0, [&node, &inputs, p] { node.start(inputs[p]); });
  }
  fill(r, h.run());
  return r;
}

MultResult run_mult(const Context& ctx, const std::vector<SecretSharing>& a, const std::vector<SecretSharing>& b,
                    const RunOptions& opt) {
  MultResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  const int L = static_cast<int>(a.size());
  std::vector<MultNode*> nodes;
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<MultNode>(p, L, 0);
    nodes.push_back(&node);
    node.on_output = [&r, &h, p](const ShareBlock& c) { r.out[p] = {true, c, h.sim().now()}; };
    h.at(p, 0, [&node, &ctx, p, &a, &b] { node.start(view_block(ctx, p, a), view_block(ctx, p, b)); });
  }
  fill(r, h.run());
  const PartySet honest = h.honest();
  honest.for_each([&](PartyId p) {
    for (int pair : nodes[p]->opened_pairs()) {
      ++r.openings;
      if (nodes[p]->subset(pair).subset_of(honest)) ++r.honest_openings;
    }
  });
  return r;
}

PreResult run_preprocessing(const Context& ctx, int count, const RunOptions& opt) {
  PreResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<PreprocessingNode>(p, count, 0);
    node.on_output = [&r, &h, &node, p] {
      r.out[p] = TripleOut{true, node.a(), node.b(), node.c(), node.cs(), h.sim().now()};
    };
    h.at(p, 0, [&node] { node.start(); });
  }
  fill(r, h.run());
  return r;
}

CirResult run_cireval(const Context& ctx, const Circuit& circuit, const std::vector<Fe>& inputs, const RunOptions& opt) {
  CirResult r;
  r.out.resize(ctx.n);
  Harness h(ctx, opt);
  for (PartyId p = 0; p < ctx.n; ++p) {
    auto& node = h.install<CirEvalNode>(p, circuit, 0);
    node.on_output = [&r, &h, &node, p, n = ctx.n](Fe y) {
      CirOut& o = r.out[p];
      o = CirOut{true, y, h.sim().now(), node.cs(), {}};
      o.inputs.resize(n);
      o.cs.for_each([&](PartyId j) { o.inputs[j] = node.input_shares(j); });
    };
    h.at(p, 0, [&node, x = inputs[p]] { node.start(x); });
  }
  fill(r, h.run());
  return r;
}

Assembled assemble(const Context& ctx, PartySet honest, const std::vector<const ShareBlock*>& views) {
  Assembled a;
  const int q = ctx.spec.q();
  int L = 0;
  for (const ShareBlock* v : views)
    if (v) L = v->L();
  a.shares.assign(q, std::vector<Fe>(L, 0));
  a.values.assign(L, 0);
  for (int m = 0; m < q; ++m) {
    bool seen = false;
    (ctx.spec.set(m) & honest).for_each([&](PartyId p) {
      const ShareBlock* v = views[p];
      if (!v) return;
      for (int l = 0; l < L; ++l) {
        if (!seen) a.shares[m][l] = v->at(m, l);
        else if (a.shares[m][l] != v->at(m, l)) a.consistent = false;
      }
      seen = true;
    });
    if (!seen) a.complete = false;
  }
  for (int l = 0; l < L; ++l)
    for (int m = 0; m < q; ++m) a.values[l] = ctx.field.add(a.values[l], a.shares[m][l]);
  return a;
}

}  // namespace bobw
