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

#include <string>
#include <vector>

#include "bobw/party_set.hpp"

namespace bobw {

// A corruption capability: the adversary may corrupt any subset of a member set.
class AdversaryStructure {
 public:
  AdversaryStructure() = default;
  // Throws std::invalid_argument on duplicates, out-of-range indices or a set equal to P.
  AdversaryStructure(int n, std::vector<PartySet> sets, std::string name = {});

  // All subsets of size <= t.
  static AdversaryStructure threshold(int n, int t, std::string name = {});

  int n() const { return n_; }
  PartySet parties() const { return PartySet::all(n_); }
  const std::string& name() const { return name_; }
  const std::vector<PartySet>& sets() const { return sets_; }
  const std::vector<PartySet>& maximal() const { return maximal_; }
  std::size_t size() const { return sets_.size(); }

  // True iff s is a subset of some member, i.e. s is corruptible.
  bool contains(PartySet s) const {
    if (s.size() == 0) return true;
    for (PartySet z : maximal_)
      if (s.subset_of(z)) return true;
    return false;
  }
  // True iff `have` covers P \ Z for some Z in the structure.
  bool covers_complement(PartySet have, PartySet scope) const { return contains(scope - have); }

  friend bool operator==(const AdversaryStructure& a, const AdversaryStructure& b);

 private:
  int n_ = 0;
  std::string name_;
  std::vector<PartySet> sets_;
  std::vector<PartySet> maximal_;
};

bool q_condition(PartySet scope, const AdversaryStructure& z, int k);
bool q_condition_mixed(PartySet scope, const AdversaryStructure& zs, const AdversaryStructure& za,
                       int k, int kp);

struct ConReport {
  enum class Clause { kNone, kDistinct, kContainment, kQ31 };
  bool ok = true;
  Clause failed = Clause::kNone;
  std::string detail;
  std::vector<PartySet> witness;
};
const char* to_string(ConReport::Clause c);

ConReport check_con(const AdversaryStructure& zs, const AdversaryStructure& za);

// Share-holder sets S_m = P \ Z_m in structure order.
class SharingSpec {
 public:
  SharingSpec() = default;
  explicit SharingSpec(const AdversaryStructure& zs);

  int n() const { return n_; }
  int q() const { return static_cast<int>(sets_.size()); }
  PartySet set(int m) const { return sets_[m]; }
  const std::vector<PartySet>& sets() const { return sets_; }
  // Indices m with party in S_m.
  const std::vector<int>& held_by(PartyId i) const { return held_[i]; }

 private:
  int n_ = 0;
  std::vector<PartySet> sets_;
  std::vector<std::vector<int>> held_;
};

}  // namespace bobw
