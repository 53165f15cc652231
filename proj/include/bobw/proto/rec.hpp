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

#include "bobw/proto/node.hpp"

namespace bobw::proto {

// Public opening of shares. Item i is share index set_of[i] carrying L values;
// every holder sends it to everyone, receivers wait for a common value from
// S_m \ Z for some Z in Z_s.
class RecNode : public Node {
 public:
  using OnOutput = std::function<void(const std::vector<std::vector<Fe>>&)>;

  RecNode(Runtime& rt, Route route, std::vector<int> set_of, int L);
  // Opens every share index of the block; the output sums to the secrets.
  static std::vector<int> all_sets(int q);

  // values[i] is ignored for items whose set the party does not belong to.
  void start(const std::vector<std::vector<Fe>>& values);
  void start_block(const ShareBlock& block);  // items are all sets, in order
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return done_; }
  const std::vector<std::vector<Fe>>& output() const { return out_; }
  // Sum of the opened items per column (reconstructed secrets).
  std::vector<Fe> sum() const;
  OnOutput on_output;

 private:
  struct Item {
    PartySet seen;
    std::vector<std::pair<std::vector<Fe>, PartySet>> tally;
    bool resolved = false;
  };
  std::vector<int> set_of_;
  int L_;
  std::vector<Item> items_;
  std::vector<std::vector<Fe>> out_;
  int unresolved_;
  bool done_ = false;
};

// One Beaver multiplication round for L products at once:
// [u v] = d e + d [b] + e [a] + [c] with d = u - a and e = v - b opened publicly.
class BeaverNode : public Node {
 public:
  using OnOutput = std::function<void(const ShareBlock&)>;

  BeaverNode(Runtime& rt, Route route, int L);
  void start(const ShareBlock& u, const ShareBlock& v, const ShareBlock& a, const ShareBlock& b, const ShareBlock& c);
  void receive(PartyId from, const Message& m) override { rec_.receive(from, m); }

  bool has_output() const { return done_; }
  const ShareBlock& output() const { return w_; }
  OnOutput on_output;

 private:
  int L_;
  RecNode rec_;
  ShareBlock a_, b_, c_;
  ShareBlock w_;
  bool done_ = false;
};

}  // namespace bobw::proto
