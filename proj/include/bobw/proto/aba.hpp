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

// Reference asynchronous binary agreement: structure-generalized binary-value
// broadcast, auxiliary votes and a common coin, with a termination amplifier.
// Rounds 1 and 2 use the fixed coins 0 and 1 so same-input synchronous runs end
// within kAbaSyncSteps; later rounds query the simulator's ideal coin.
class AbaNode : public Node {
 public:
  using OnOutput = std::function<void(int)>;

  AbaNode(Runtime& rt, Route route, const AdversaryStructure& z);

  void start(int input);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return has_output_; }
  int output() const { return output_; }
  Tick output_time() const { return output_time_; }
  std::int64_t rounds() const { return round_; }
  OnOutput on_output;

  static constexpr std::int64_t kMaxRound = 1 << 14;

 private:
  struct Round {
    PartySet est_from[2];
    bool est_sent[2] = {false, false};
    int bin = 0;  // bitmask of accepted values
    PartySet aux_seen;
    PartySet aux_from[2];
    bool aux_sent = false;
  };
  Round& round(std::int64_t r);
  void send_est(std::int64_t r, int b);
  void on_est(std::int64_t r, int b, PartyId from);
  void try_aux(std::int64_t r);
  void try_advance();
  int coin(std::int64_t r);

  const AdversaryStructure& z_;
  bool started_ = false;
  std::int64_t round_ = 0;
  int est_ = 0;
  std::vector<Round> rounds_;
  bool decided_ = false;
  bool term_sent_ = false;
  PartySet term_seen_;
  PartySet term_from_[2];
  bool has_output_ = false;
  int output_ = -1;
  Tick output_time_ = -1;
};

}  // namespace bobw::proto
