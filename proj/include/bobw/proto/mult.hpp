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

#include "bobw/proto/acs.hpp"
#include "bobw/proto/rec.hpp"

namespace bobw::proto {

// Secure multiplication of L shared pairs. For every ordered pair (l, m) of share
// indices the members of Q_lm = S_l and S_m agree on a subset R_lm of dealers of
// [a]_l [b]_m; the candidates are compared publicly and the first one is adopted
// when all agree, otherwise [a]_l and [b]_m are opened. Each party runs one VSS
// holding its summands for every pair it belongs to.
class MultNode : public Node {
 public:
  using OnOutput = std::function<void(const ShareBlock&)>;

  MultNode(Runtime& rt, Route route, int L, Tick anchor);

  void start(const ShareBlock& a, const ShareBlock& b);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  const ShareBlock& output() const { return c_; }
  Tick output_time() const { return out_time_; }
  // Pairs for which shares of a and b were opened, and the agreed subsets.
  const std::vector<int>& opened_pairs() const { return opened_; }
  PartySet subset(int pair) const { return pairs_[pair].r; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  OnOutput on_output;

 private:
  struct Pair {
    int l = 0, m = 0;
    PartySet q;
    std::unique_ptr<AcsCore> acs;
    std::unique_ptr<RecNode> diff;
    std::unique_ptr<RecNode> open;
    PartySet r;
    bool done = false;
    ShareBlock summand;
  };
  // Offset (in values) of pair p inside dealer j's VSS.
  int offset(PartyId j, int p) const { return slot_[static_cast<std::size_t>(j) * pairs_.size() + p] * L_; }
  void on_vss(PartyId j);
  void on_subset(int p, PartySet r);
  void on_diff(int p);
  void on_open(int p);
  void settle(int p, ShareBlock summand);
  ShareBlock column_block(PartyId j, int p) const;

  int L_;
  Tick anchor_;
  Stash stash_;
  std::vector<Pair> pairs_;
  std::vector<int> slot_;
  std::vector<int> count_;
  std::vector<std::unique_ptr<VssNode>> vss_;
  ShareBlock a_, b_;
  int remaining_ = 0;
  std::vector<int> opened_;
  ShareBlock c_;
  bool done_ = false;
  Tick out_time_ = -1;
};

// Random multiplication triples: ACS over all parties on 2*count random values,
// sums over the agreed subset, then one multiplication.
class PreprocessingNode : public Node {
 public:
  using OnOutput = std::function<void()>;

  PreprocessingNode(Runtime& rt, Route route, int count, Tick anchor);

  void start();
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  const ShareBlock& a() const { return a_; }
  const ShareBlock& b() const { return b_; }
  const ShareBlock& c() const { return mult_ ? mult_->output() : c_empty_; }
  PartySet cs() const { return acs_.cs(); }
  Tick output_time() const { return out_time_; }
  const MultNode* mult() const { return mult_.get(); }
  OnOutput on_output;

 private:
  int count_;
  AcsNode acs_;
  std::unique_ptr<MultNode> mult_;
  Stash stash_;
  ShareBlock a_, b_, c_empty_;
  bool done_ = false;
  Tick out_time_ = -1;
};

}  // namespace bobw::proto
