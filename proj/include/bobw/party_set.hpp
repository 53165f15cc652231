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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bobw {

using PartyId = int;

constexpr int kMaxParties = 64;

// Subset of parties {0..n-1} packed into one machine word.
class PartySet {
 public:
  constexpr PartySet() = default;
  constexpr explicit PartySet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PartySet all(int n) {
    return PartySet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr PartySet single(PartyId i) { return PartySet(std::uint64_t{1} << i); }
  static PartySet of(std::initializer_list<PartyId> ids) {
    PartySet s;
    for (PartyId i : ids) s.insert(i);
    return s;
  }
  static PartySet of(const std::vector<PartyId>& ids) {
    PartySet s;
    for (PartyId i : ids) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(PartyId i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(PartyId i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(PartyId i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(PartySet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PartySet o) const { return (bits_ & o.bits_) != 0; }

  constexpr PartySet operator|(PartySet o) const { return PartySet(bits_ | o.bits_); }
  constexpr PartySet operator&(PartySet o) const { return PartySet(bits_ & o.bits_); }
  constexpr PartySet operator-(PartySet o) const { return PartySet(bits_ & ~o.bits_); }
  constexpr PartySet& operator|=(PartySet o) { bits_ |= o.bits_; return *this; }
  constexpr PartySet& operator&=(PartySet o) { bits_ &= o.bits_; return *this; }
  constexpr PartySet& operator-=(PartySet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(PartySet a, PartySet b) = default;
  friend constexpr auto operator<=>(PartySet a, PartySet b) { return a.bits_ <=> b.bits_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<PartyId>(std::countr_zero(b)));
  }
  std::vector<PartyId> members() const {
    std::vector<PartyId> out;
    for_each([&](PartyId i) { out.push_back(i); });
    return out;
  }
  PartyId first() const { return static_cast<PartyId>(std::countr_zero(bits_)); }

  // 1-based rendering, e.g. "{1,3,5}".
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](PartyId i) {
      if (!first_item) s += ',';
      s += std::to_string(i + 1);
      first_item = false;
    });
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bobw
