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

#include "bobw/proto/acast.hpp"

namespace bobw::proto {

// Phase-king agreement over arbitrary values; a null value stands for the empty value.
// Each phase takes 3 delta; the output is fixed at start + 3n delta whatever the network does.
class SbaNode : public Node {
 public:
  using OnOutput = std::function<void(const ValuePtr&)>;

  SbaNode(Runtime& rt, Route route, const AdversaryStructure& z, std::vector<PartyId> kings,
          std::vector<std::int64_t> prefix = {});

  // Schedules phases from `t0`; steps already in the past are skipped.
  void start(Tick t0, ValuePtr input);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return has_output_; }
  const ValuePtr& output() const { return pref_; }
  OnOutput on_output;

 private:
  struct Phase {
    Tally pref, propose;
    PartySet pref_seen, propose_seen;
    bool has_king = false;
    ValuePtr king;
    bool has_strong = false;
    ValuePtr strong;
  };
  Message stamped(MsgKind kind, int phase, const ValuePtr& v) const;
  Phase& phase(int k);
  void step_pref(int k);
  void step_propose(int k);
  void step_king(int k);
  void step_adopt(int k);
  void finish();

  const AdversaryStructure& z_;
  std::vector<PartyId> kings_;
  std::vector<std::int64_t> prefix_;
  std::vector<Phase> phases_;
  bool started_ = false;
  bool has_output_ = false;
  ValuePtr pref_;
};

}  // namespace bobw::proto
