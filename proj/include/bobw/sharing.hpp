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
#include <random>
#include <vector>

#include "bobw/field.hpp"
#include "bobw/structures.hpp"

namespace bobw {

// Ground-truth sharing as seen by the harness: one share per set S_m.
struct SecretSharing {
  std::vector<Fe> shares;  // index m
  // Shares that party i is entitled to see.
  std::vector<std::pair<int, Fe>> view(const SharingSpec& spec, PartyId i) const;
};

SecretSharing share(Fe s, const SharingSpec& spec, const PrimeField& f, std::mt19937_64& rng);
SecretSharing default_sharing(Fe s, const SharingSpec& spec);
SecretSharing lin_combine(const PrimeField& f, Fe c1, const SecretSharing& a, Fe c2, const SecretSharing& b);
Fe reconstruct(const PrimeField& f, const SecretSharing& sh);

// A party's local holdings for a batch of L shared values. Entry (m, l) is meaningful
// only when the party belongs to S_m; other entries stay zero.
class ShareBlock {
 public:
  ShareBlock() = default;
  ShareBlock(int q, int L) : q_(q), L_(L), data_(static_cast<std::size_t>(q) * L, 0) {}

  int q() const { return q_; }
  int L() const { return L_; }
  Fe& at(int m, int l) { return data_[static_cast<std::size_t>(m) * L_ + l]; }
  Fe at(int m, int l) const { return data_[static_cast<std::size_t>(m) * L_ + l]; }
  const Fe* row(int m) const { return data_.data() + static_cast<std::size_t>(m) * L_; }
  Fe* row(int m) { return data_.data() + static_cast<std::size_t>(m) * L_; }

  // Column l as a single-value block.
  ShareBlock column(int l) const;
  // Concatenate columns of several blocks.
  static ShareBlock concat(const std::vector<const ShareBlock*>& parts);

  // this += c * other (all rows).
  void axpy(const PrimeField& f, Fe c, const ShareBlock& other);
  // Add a public constant to value l; by convention it goes into share 0.
  void add_constant(const PrimeField& f, int l, Fe c, bool holds_first);

 private:
  int q_ = 0;
  int L_ = 0;
  std::vector<Fe> data_;
};

}  // namespace bobw
