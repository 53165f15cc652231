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

#include "bobw/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace bobw {

AdversaryStructure::AdversaryStructure(int n, std::vector<PartySet> sets, std::string name)
    : n_(n), name_(std::move(name)), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("party count out of range");
  const PartySet all = PartySet::all(n);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].subset_of(all)) throw std::invalid_argument("party index out of range");
    if (sets_[i] == all) throw std::invalid_argument("member set equals the whole party set");
    for (std::size_t j = 0; j < i; ++j)
      if (sets_[i] == sets_[j]) throw std::invalid_argument("duplicate member set " + sets_[i].to_string());
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets_.size() && !dominated; ++j)
      dominated = j != i && sets_[i].subset_of(sets_[j]) && sets_[i] != sets_[j];
    if (!dominated) maximal_.push_back(sets_[i]);
  }
}

AdversaryStructure AdversaryStructure::threshold(int n, int t, std::string name) {
  std::vector<PartySet> sets;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < limit; ++b) {
    PartySet s(b);
    if (s.size() <= t && s.size() < n) sets.push_back(s);
  }
  return AdversaryStructure(n, std::move(sets), std::move(name));
}

bool operator==(const AdversaryStructure& a, const AdversaryStructure& b) {
  if (a.n_ != b.n_ || a.sets_.size() != b.sets_.size()) return false;
  auto x = a.sets_, y = b.sets_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

// Does some choice of `need` sets from `pool[from..]` cover `scope` given `acc`?
bool covers(const std::vector<PartySet>& pool, std::size_t from, int need, PartySet acc, PartySet scope) {
  if (scope.subset_of(acc)) return true;
  if (need == 0) return false;
  for (std::size_t i = from; i + need <= pool.size(); ++i)
    if (covers(pool, i + 1, need - 1, acc | pool[i], scope)) return true;
  return false;
}

bool mixed_cover(const std::vector<PartySet>& zs, int k, const std::vector<PartySet>& za, int kp,
                 PartySet scope) {
  const int ks = std::min<int>(k, static_cast<int>(zs.size()));
  const int ka = std::min<int>(kp, static_cast<int>(za.size()));
  if (ka == 0) return covers(zs, 0, ks, PartySet{}, scope);
  // Enumerate Za choices explicitly, then delegate the Zs part.
  std::vector<std::size_t> idx(ka);
  for (int i = 0; i < ka; ++i) idx[i] = i;
  while (true) {
    PartySet acc;
    for (std::size_t i : idx) acc |= za[i];
    if (covers(zs, 0, ks, acc, scope)) return true;
    int pos = ka - 1;
    while (pos >= 0 && idx[pos] == za.size() - ka + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int j = pos + 1; j < ka; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool q_condition(PartySet scope, const AdversaryStructure& z, int k) {
  return !mixed_cover(z.maximal(), k, {}, 0, scope);
}

bool q_condition_mixed(PartySet scope, const AdversaryStructure& zs, const AdversaryStructure& za,
                       int k, int kp) {
  return !mixed_cover(zs.maximal(), k, za.maximal(), kp, scope);
}

const char* to_string(ConReport::Clause c) {
  switch (c) {
    case ConReport::Clause::kNone: return "none";
    case ConReport::Clause::kDistinct: return "distinct";
    case ConReport::Clause::kContainment: return "containment";
    case ConReport::Clause::kQ31: return "q31";
  }
  return "?";
}

ConReport check_con(const AdversaryStructure& zs, const AdversaryStructure& za) {
  ConReport r;
  if (zs.n() != za.n()) {
    r.ok = false;
    r.failed = ConReport::Clause::kContainment;
    r.detail = "structures range over different party sets";
    return r;
  }
  if (zs == za) {
    r.ok = false;
    r.failed = ConReport::Clause::kDistinct;
    r.detail = "synchronous and asynchronous structures are equal";
    return r;
  }
  for (PartySet a : za.sets()) {
    if (!zs.contains(a)) {
      r.ok = false;
      r.failed = ConReport::Clause::kContainment;
      r.detail = "set " + a.to_string() + " is not inside any synchronous set";
      r.witness = {a};
      return r;
    }
  }
  // Search a covering witness for the report.
  const auto& ms = zs.maximal();
  const auto& ma = za.maximal();
  const PartySet all = zs.parties();
  for (std::size_t a = 0; a < std::max<std::size_t>(ma.size(), 1); ++a) {
    PartySet base = ma.empty() ? PartySet{} : ma[a];
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i; j < ms.size(); ++j)
        for (std::size_t l = j; l < ms.size(); ++l)
          if (all.subset_of(base | ms[i] | ms[j] | ms[l])) {
            r.ok = false;
            r.failed = ConReport::Clause::kQ31;
            r.witness = {ms[i], ms[j], ms[l]};
            if (!ma.empty()) r.witness.push_back(base);
            r.detail = "three synchronous sets and one asynchronous set cover P";
            return r;
          }
  }
  return r;
}

SharingSpec::SharingSpec(const AdversaryStructure& zs) : n_(zs.n()), held_(zs.n()) {
  const PartySet all = zs.parties();
  for (PartySet z : zs.sets()) {
    if (z == all) throw std::invalid_argument("a synchronous set equals P");
    sets_.push_back(all - z);
  }
  for (int m = 0; m < q(); ++m) sets_[m].for_each([&](PartyId i) { held_[i].push_back(m); });
}

}  // namespace bobw
