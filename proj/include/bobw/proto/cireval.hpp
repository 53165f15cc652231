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

#include "bobw/circuit.hpp"
#include "bobw/proto/mult.hpp"

namespace bobw::proto {

// Circuit evaluation: input ACS and triple generation in parallel, local linear
// gates, one Beaver round per multiplicative level, public output, then a ready
// cascade after which the party halts.
class CirEvalNode : public Node {
 public:
  using OnOutput = std::function<void(Fe)>;

  CirEvalNode(Runtime& rt, Route route, const Circuit& circuit, Tick anchor);

  void start(Fe input);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  Fe output() const { return y_; }
  Tick output_time() const { return out_time_; }
  PartySet cs() const { return inputs_.cs(); }
  // Input shares of member j of cs(); valid once the input ACS has output.
  const ShareBlock& input_shares(PartyId j) const { return inputs_.shares(j); }
  const PreprocessingNode* preprocessing() const { return pre_.get(); }
  OnOutput on_output;

 private:
  void try_evaluate();
  void run_linear();
  void start_level(int level);
  void open_output();
  void send_ready(Fe y);
  void on_ready(PartyId from, Fe y);

  const Circuit& circuit_;
  AcsNode inputs_;
  std::unique_ptr<PreprocessingNode> pre_;
  Stash stash_;
  bool evaluating_ = false;
  std::vector<ShareBlock> wire_;
  std::vector<char> ready_;
  std::vector<std::unique_ptr<BeaverNode>> levels_;
  std::unique_ptr<RecNode> out_rec_;
  bool ready_sent_ = false;
  PartySet ready_seen_;
  std::vector<std::pair<Fe, PartySet>> ready_from_;
  bool done_ = false;
  Fe y_ = 0;
  Tick out_time_ = -1;
};

}  // namespace bobw::proto
