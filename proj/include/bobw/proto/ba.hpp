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

#include "bobw/proto/aba.hpp"
#include "bobw/proto/bc.hpp"

namespace bobw::proto {

// Best-of-both-worlds binary agreement: every party broadcasts its bit, the
// regular-mode outputs pick an ABA input, then the ABA decides.
class BaNode : public Node {
 public:
  using OnOutput = std::function<void(int)>;

  BaNode(Runtime& rt, Route route, const AdversaryStructure& z);

  // Messages arriving before start are buffered.
  void start(int input);
  void receive(PartyId from, const Message& m) override;

  bool started() const { return started_; }
  bool has_output() const { return aba_.has_output(); }
  int output() const { return aba_.output(); }
  Tick output_time() const { return aba_.output_time(); }
  int vstar() const { return vstar_; }
  OnOutput on_output;

 private:
  void on_regular();

  const AdversaryStructure& z_;
  bool started_ = false;
  int input_ = 0;
  std::vector<std::unique_ptr<BcNode>> bc_;
  std::vector<std::pair<PartyId, std::shared_ptr<const Message>>> buffer_;
  int regular_count_ = 0;
  int vstar_ = -1;
  AbaNode aba_;
};

// ABA input rule: a common bit among a large enough subset of the regular outputs
// (preferring 0), else 1; or the own input when too few regular outputs arrived.
// `bits[j]` is 0, 1 or -1 for no bit.
int ba_vstar(const AdversaryStructure& z, const std::vector<int>& bits, int own);

}  // namespace bobw::proto
