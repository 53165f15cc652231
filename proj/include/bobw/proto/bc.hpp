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
#include "bobw/proto/sba.hpp"

namespace bobw::proto {

// Synchronous broadcast with asynchronous fallback. The regular output is fixed
// at anchor + T_BC; a null regular output may later be upgraded by the Acast value.
class BcNode : public Node {
 public:
  using OnRegular = std::function<void(const ValuePtr&)>;
  using OnOutput = std::function<void(const ValuePtr&, bool fallback)>;

  BcNode(Runtime& rt, Route route, const AdversaryStructure& z, PartyId sender, Tick anchor);

  void start(ValuePtr m);
  void receive(PartyId from, const Message& m) override;

  PartyId sender() const { return sender_; }
  Tick anchor() const { return anchor_; }
  bool regular_done() const { return regular_done_; }
  const ValuePtr& regular() const { return regular_; }
  bool has_output() const { return has_output_; }
  const ValuePtr& output() const { return output_; }
  bool fallback() const { return fallback_; }
  Tick output_time() const { return output_time_; }

  OnRegular on_regular;
  OnOutput on_output;

 private:
  void start_sba();
  void on_sba(const ValuePtr& v);
  void emit(const ValuePtr& v, bool fallback);

  PartyId sender_;
  Tick anchor_;
  AcastNode acast_;
  SbaNode sba_;
  bool regular_done_ = false;
  ValuePtr regular_;
  bool has_output_ = false;
  ValuePtr output_;
  bool fallback_ = false;
  Tick output_time_ = -1;
};

// Kings default to every party in index order.
std::vector<PartyId> default_kings(int n);

}  // namespace bobw::proto
