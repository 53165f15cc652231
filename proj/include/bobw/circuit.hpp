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

#include <cstdint>
#include <string>
#include <vector>

#include "bobw/field.hpp"
#include "bobw/party_set.hpp"

namespace bobw {

struct Gate {
  enum class Op { kInput, kConst, kAdd, kCMul, kCAdd, kMul };
  Op op = Op::kConst;
  int a = -1;              // operand wires
  int b = -1;
  std::int64_t c = 0;      // constant (reduced mod p on use)
  PartyId party = -1;      // INPUT owner, 0-based
  int depth = 0;           // multiplicative depth of the output wire
  int mul_index = -1;      // triple index for MUL gates
  int level = -1;          // MUL gates: Beaver round (depth - 1)
};

// Arithmetic circuit, one gate per wire, in topological (file) order.
class Circuit {
 public:
  // Line format: `w = ADD a b | CMUL c a | CADD c a | MUL a b | INPUT i | CONST c`,
  // plus one `OUTPUT w`. Parties are 1-based; '#' starts a comment.
  static Circuit parse(const std::string& text, int n);
  static Circuit load(const std::string& path, int n);

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& names() const { return names_; }
  int output() const { return output_; }
  int mul_depth() const { return mul_depth_; }
  int mul_count() const { return mul_count_; }
  // Gate ids of MUL gates per level.
  const std::vector<std::vector<int>>& levels() const { return levels_; }

  Fe evaluate(const PrimeField& f, const std::vector<Fe>& inputs) const;

 private:
  std::vector<Gate> gates_;
  std::vector<std::string> names_;
  int output_ = -1;
  int mul_depth_ = 0;
  int mul_count_ = 0;
  std::vector<std::vector<int>> levels_;
};

}  // namespace bobw
