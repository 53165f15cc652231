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

#include "bobw/proto/ba.hpp"
#include "bobw/proto/vss.hpp"

namespace bobw::proto {

// Agreement part of ACS over dealer set Q. The owner reports VSS completions via
// vss_done(); the output is the common subset, released no earlier than anchor + T_ACS.
class AcsCore : public Node {
 public:
  using OnOutput = std::function<void(PartySet)>;

  AcsCore(Runtime& rt, Route route, PartySet q, Tick anchor);

  void vss_done(PartyId j);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  PartySet output() const { return cs_; }
  Tick output_time() const { return out_time_; }
  OnOutput on_output;

 private:
  void start_ba(PartyId j, int input);
  void on_ba(PartyId j, int b);
  void try_finish();

  PartySet q_;
  Tick anchor_;
  std::vector<std::unique_ptr<BaNode>> ba_;
  PartySet vss_done_, started_, ones_, decided_;
  bool after_vss_ = false;
  bool floor_reached_ = false;
  bool zeros_ = false;
  bool done_ = false;
  PartySet cs_;
  Tick out_time_ = -1;
};

// Standalone ACS: one VSS of L values per member of Q plus the agreement.
class AcsNode : public Node {
 public:
  using OnOutput = std::function<void(PartySet, const std::vector<const ShareBlock*>&)>;

  AcsNode(Runtime& rt, Route route, PartySet q, int L, Tick anchor);

  void start(const std::vector<Fe>& inputs);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  PartySet cs() const { return core_.output(); }
  // Shares of member j's values; valid for j in cs() once has_output().
  const ShareBlock& shares(PartyId j) const { return vss_[j]->output(); }
  Tick output_time() const { return out_time_; }
  VssNode* vss(PartyId j) const { return vss_[j].get(); }
  OnOutput on_output;

 private:
  void try_finish();

  PartySet q_;
  int L_;
  std::vector<std::unique_ptr<VssNode>> vss_;
  AcsCore core_;
  bool done_ = false;
  Tick out_time_ = -1;
};

}  // namespace bobw::proto
