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

#include <optional>

#include "bobw/proto/ba.hpp"
#include "bobw/proto/bc.hpp"

namespace bobw::proto {

// First core set of the form S_m \ Z (Z in structure order) that is a clique.
using EdgeFn = std::function<bool(PartyId, PartyId)>;
std::optional<PartySet> find_core(PartySet sm, const AdversaryStructure& z, const EdgeFn& edge);
bool is_clique(PartySet c, const EdgeFn& edge);

// Verifiable sharing of L values by `dealer`, started by every party at `anchor`.
class VssNode : public Node {
 public:
  using OnOutput = std::function<void(const ShareBlock&)>;

  VssNode(Runtime& rt, Route route, PartyId dealer, int L, Tick anchor);

  // Dealer only: samples the shares of `secrets` and hands them out.
  void start(const std::vector<Fe>& secrets);
  void receive(PartyId from, const Message& m) override;

  PartyId dealer() const { return dealer_; }
  int L() const { return L_; }
  bool has_output() const { return done_; }
  const ShareBlock& output() const { return out_; }
  Tick output_time() const { return out_time_; }
  int ba_output() const { return ba_.has_output() ? ba_.output() : -1; }
  const std::vector<char>& rules() const { return rule_; }
  // Dealer only: the shares it dealt, [m][l].
  const ShareBlock& dealt() const { return dealt_; }
  // Accepted Z_s-based core sets, if any.
  const std::optional<std::vector<PartySet>>& core_c() const { return core_c_; }
  // Arrival time of the dealer's share m, or -1.
  Tick share_time(int m) const { return share_at_[m]; }
  OnOutput on_output;

 private:
  enum Kind : std::uint32_t { kOk = 1, kOkSet = 2, kNok = 3, kRes = 4, kDealerRes = 5, kCore = 6, kCoreE = 7, kBa = 8 };

  bool holds(int m) const { return spec().set(m).contains(self()); }
  const SharingSpec& spec() const { return ctx().spec; }
  const Fe* recv(int m, PartyId j) const { return &recv_[(static_cast<std::size_t>(m) * n() + j) * L_]; }
  bool same(const Fe* a, const Fe* b) const;
  bool edge(int m, PartyId i, PartyId j) const;
  bool snap_edge(int m, PartyId i, PartyId j) const;

  BcNode* bc(std::uint32_t key) const { return bcs_.find(key); }
  BcNode* open_bc(std::uint32_t key, PartyId sender, Tick anchor);
  void broadcast(std::uint32_t key, Blob value);
  void route_bc(PartyId from, std::uint32_t key, const Message& m);

  void on_share(int m, const Message& msg);
  void on_pcheck(PartyId from, int m, const Message& msg);
  void schedule_eval();
  void evaluate();
  void on_graph_change();

  void freeze_evidence();
  void resolve_step();
  void accept_step();
  void proceed();
  bool c_sets_valid(const std::vector<PartySet>& c, bool snapshot, const AdversaryStructure& z) const;
  void try_shares_c();
  void try_find_e();
  void try_shares_e();
  void finish();

  PartyId dealer_;
  int L_;
  Tick anchor_;
  Timing t_;

  ShareBlock dealt_;
  ShareBlock own_;
  std::vector<char> has_own_;
  std::vector<Tick> share_at_;
  std::vector<Fe> recv_;
  std::vector<PartySet> recv_from_;
  std::vector<PartySet> frozen_from_;
  Tick eval_at_ = -1;
  std::vector<PartySet> ok_sent_;     // batched: [0][j]; per-set mode: [m][j]
  std::vector<char> nok_sent_;

  std::vector<PartySet> ok_;          // batched: ok_[i] = {j : OK(i,j)}; per-set: ok_[m*n+i]
  std::vector<PartySet> ok_snap_;
  std::vector<PartySet> nok_regular_;
  bool nok_frozen_ = false;

  bool resolve_frozen_ = false;
  std::vector<std::optional<std::vector<Fe>>> dealer_res_;
  std::vector<std::vector<std::optional<std::vector<Fe>>>> res_;

  Children<BcNode> bcs_;
  std::vector<std::pair<PartyId, std::shared_ptr<const Message>>> gated_;
  BaNode ba_;
  bool time_reached_ = false;
  bool proceeded_ = false;

  std::optional<std::vector<PartySet>> core_c_;
  std::optional<std::vector<PartySet>> core_e_;
  bool e_broadcast_ = false;
  bool e_accepted_ = false;

  std::vector<char> rule_;
  ShareBlock out_;
  int pending_ = 0;
  bool done_ = false;
  Tick out_time_ = -1;
};

}  // namespace bobw::proto
