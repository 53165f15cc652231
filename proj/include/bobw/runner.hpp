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

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bobw/circuit.hpp"
#include "bobw/proto/node.hpp"
#include "bobw/sharing.hpp"

namespace bobw {

using sim::Tick;
using sim::ValuePtr;

struct RunOptions {
  sim::NetConfig net;
  std::uint64_t seed = 0;
  PartySet corrupt;
  sim::StrategySpec strategy;
  bool trace = false;
  bool probes = false;
  std::function<void(const sim::Envelope&)> observer;
};

struct RunInfo {
  bool timed_out = false;
  Tick end = 0;
  sim::NetStats stats;
  std::uint64_t trace_hash = 0;
  std::vector<sim::TraceEvent> trace;
  std::vector<sim::Probe> probes;
};

template <typename T>
struct PartyOut {
  bool has = false;
  T value{};
  Tick time = -1;
};

// Root of a party's protocol tree: forwards everything under key 0.
class HostNode : public proto::Node {
 public:
  explicit HostNode(proto::Runtime& rt) : Node(rt, {}) {}
  void receive(PartyId from, const sim::Message& m) override {
    if (!for_me(m) && next_key(m) == 0 && child) child->receive(from, m);
  }
  sim::Route sub() const { return child_route(0); }
  std::unique_ptr<proto::Node> child;
};

// One simulated run: simulator, runtimes and a protocol instance per party.
class Harness {
 public:
  Harness(const proto::Context& ctx, const RunOptions& opt);
  ~Harness();

  const proto::Context& ctx() const { return ctx_; }
  sim::Simulator& sim() { return *sim_; }
  proto::Runtime& rt(PartyId p) { return *rts_[p]; }
  int n() const { return ctx_.n; }
  PartySet honest() const { return PartySet::all(ctx_.n) - corrupt_; }
  PartySet corrupt() const { return corrupt_; }
  bool is_corrupt(PartyId p) const { return corrupt_.contains(p); }

  template <typename T, typename... Args>
  T& install(PartyId p, Args&&... args) {
    auto* host = static_cast<HostNode*>(rts_[p]->root());
    auto node = std::make_unique<T>(*rts_[p], host->sub(), std::forward<Args>(args)...);
    T& ref = *node;
    host->child = std::move(node);
    return ref;
  }
  // Runs `fn` for party p at tick t.
  void at(PartyId p, Tick t, std::function<void()> fn) { sim_->schedule(p, t, 0, std::move(fn)); }

  RunInfo run();

 private:
  const proto::Context& ctx_;
  PartySet corrupt_;
  std::unique_ptr<sim::Simulator> sim_;
  std::vector<std::unique_ptr<proto::Runtime>> rts_;
  bool trace_ = false;
};

// Context for protocols that use a single structure.
proto::Context single_structure_context(const AdversaryStructure& z, Tick delta = 1);

struct AcastResult : RunInfo { std::vector<PartyOut<ValuePtr>> out; };
AcastResult run_acast(const AdversaryStructure& z, PartyId sender, ValuePtr m, const RunOptions& opt);

struct SbaResult : RunInfo { std::vector<PartyOut<ValuePtr>> out; };
SbaResult run_sba(const AdversaryStructure& z, const std::vector<ValuePtr>& inputs, const RunOptions& opt);

struct BcOut {
  bool regular_done = false;
  ValuePtr regular;
  Tick regular_time = -1;
  bool has = false;
  ValuePtr value;
  bool fallback = false;
  Tick time = -1;
};
struct BcResult : RunInfo { std::vector<BcOut> out; };
// `sender_start` lets a corrupt sender begin late, which drives the fallback path.
BcResult run_bc(const AdversaryStructure& z, PartyId sender, ValuePtr m, const RunOptions& opt, Tick sender_start = 0);

struct BitResult : RunInfo {
  std::vector<PartyOut<int>> out;
  std::vector<int> vstar;  // BA only
};
BitResult run_aba(const AdversaryStructure& z, const std::vector<int>& inputs, const RunOptions& opt);
BitResult run_ba(const AdversaryStructure& z, const std::vector<int>& inputs, const RunOptions& opt);

struct VecResult : RunInfo { std::vector<PartyOut<std::vector<Fe>>> out; };
// Public reconstruction of L shared values; sharings[l] is the ground truth of value l.
VecResult run_rec(const proto::Context& ctx, const std::vector<SecretSharing>& sharings, const RunOptions& opt);

struct BeaverResult : RunInfo { std::vector<PartyOut<ShareBlock>> out; };
BeaverResult run_beaver(const proto::Context& ctx, const std::vector<SecretSharing>& u, const std::vector<SecretSharing>& v,
                        const std::vector<SecretSharing>& a, const std::vector<SecretSharing>& b,
                        const std::vector<SecretSharing>& c, const RunOptions& opt);

struct VssOut {
  bool has = false;
  ShareBlock shares;
  Tick time = -1;
  int ba = -1;
  std::vector<char> rule;  // per m: 'A', 'B', 'C', 'E' (own share), 'F' (common value from E'), 0
  std::vector<PartySet> core;        // accepted C_m, empty if none
  std::vector<Tick> share_time;      // per m: arrival of the dealer's share, -1 if none
};
struct VssResult : RunInfo {
  std::vector<VssOut> out;
  std::vector<SecretSharing> dealt;  // the honest dealer's ground truth per value
};
VssResult run_vss(const proto::Context& ctx, PartyId dealer, const std::vector<Fe>& secrets, const RunOptions& opt);

struct AcsOut {
  bool has = false;
  PartySet cs;
  std::vector<ShareBlock> shares;  // indexed by member
  Tick time = -1;
};
struct AcsResult : RunInfo { std::vector<AcsOut> out; };
AcsResult run_acs(const proto::Context& ctx, PartySet q, const std::vector<std::vector<Fe>>& inputs, const RunOptions& opt);

struct MultResult : RunInfo {
  std::vector<PartyOut<ShareBlock>> out;
  std::uint64_t openings = 0;          // share openings of [a]_l or [b]_m
  std::uint64_t honest_openings = 0;   // openings where the agreed subset was all honest
};
MultResult run_mult(const proto::Context& ctx, const std::vector<SecretSharing>& a, const std::vector<SecretSharing>& b,
                    const RunOptions& opt);

struct TripleOut {
  bool has = false;
  ShareBlock a, b, c;
  PartySet cs;
  Tick time = -1;
};
struct PreResult : RunInfo { std::vector<TripleOut> out; };
PreResult run_preprocessing(const proto::Context& ctx, int count, const RunOptions& opt);

struct CirOut {
  bool has = false;
  Fe y = 0;
  Tick time = -1;
  PartySet cs;
  std::vector<ShareBlock> inputs;  // shares of each CS member's input, indexed by party
};
struct CirResult : RunInfo { std::vector<CirOut> out; };
CirResult run_cireval(const proto::Context& ctx, const Circuit& circuit, const std::vector<Fe>& inputs, const RunOptions& opt);

// Ground truth reassembled from the honest parties' views; fails if two honest
// holders of share m disagree.
struct Assembled {
  bool consistent = true;
  bool complete = true;
  std::vector<std::vector<Fe>> shares;  // [m][l]
  std::vector<Fe> values;               // per l
};
Assembled assemble(const proto::Context& ctx, PartySet honest, const std::vector<const ShareBlock*>& views);

}  // namespace bobw
