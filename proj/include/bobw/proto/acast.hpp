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

// Per-value sender tally.
class Tally {
 public:
  PartySet& at(const ValuePtr& v) {
    for (auto& [val, set] : items_)
      if (sim::same_value(val, v)) return set;
    items_.emplace_back(v, PartySet{});
    return items_.back().second;
  }
  // Values in canonical order.
  std::vector<std::pair<ValuePtr, PartySet>> sorted() const;
  const std::vector<std::pair<ValuePtr, PartySet>>& items() const { return items_; }

 private:
  std::vector<std::pair<ValuePtr, PartySet>> items_;
};

// Reliable broadcast generalized to an adversary structure: init, echo, ready.
class AcastNode : public Node {
 public:
  using OnOutput = std::function<void(const ValuePtr&)>;

  // `prefix` is copied into every message (e.g. an anchor time).
  AcastNode(Runtime& rt, Route route, const AdversaryStructure& z, PartyId sender,
            std::vector<std::int64_t> prefix = {});

  void start(ValuePtr m);
  void receive(PartyId from, const Message& m) override;

  bool has_output() const { return has_output_; }
  const ValuePtr& output() const { return output_; }
  Tick output_time() const { return output_time_; }
  OnOutput on_output;

 private:
  Message stamped(MsgKind kind, const ValuePtr& v) const;
  void on_echo(PartyId from, const ValuePtr& v);
  void on_ready(PartyId from, const ValuePtr& v);
  void send_ready(const ValuePtr& v);

  const AdversaryStructure& z_;
  PartyId sender_;
  std::vector<std::int64_t> prefix_;
  bool echoed_ = false;
  bool readied_ = false;
  PartySet echo_seen_, ready_seen_;
  Tally echo_, ready_;
  bool has_output_ = false;
  ValuePtr output_;
  Tick output_time_ = -1;
};

}  // namespace bobw::proto
