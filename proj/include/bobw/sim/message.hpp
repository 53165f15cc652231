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
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bobw/field.hpp"

namespace bobw::sim {

using Tick = std::int64_t;
using Route = boost::container::small_vector<std::uint32_t, 8>;
using Blob = std::vector<std::uint64_t>;
using ValuePtr = std::shared_ptr<const Blob>;

enum class MsgKind : std::uint8_t {
  kPing,
  kAcastInit,
  kAcastEcho,
  kAcastReady,
  kSbaPref,
  kSbaPropose,
  kSbaKing,
  kAbaEst,
  kAbaAux,
  kAbaTerm,
  kRecShare,
  kVssShare,
  kVssPcheck,
  kReady,
};

const char* kind_name(MsgKind k);
// Coarse protocol family used for per-protocol counters.
const char* family(MsgKind k);

struct Message {
  Route route;
  MsgKind kind = MsgKind::kPing;
  boost::container::small_vector<std::int64_t, 4> ints;
  boost::container::small_vector<Fe, 4> elems;
  ValuePtr value;  // null encodes the distinguished empty value

  // Length of the canonical encoding: kind byte, then length-prefixed route,
  // ints, elems and value, all fixed-width little-endian words.
  std::size_t encoded_bytes() const;
  std::uint64_t digest() const;
};

using MessagePtr = std::shared_ptr<const Message>;

inline bool same_value(const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}
// Total order over values with the empty value first.
inline bool value_less(const ValuePtr& a, const ValuePtr& b) {
  if (!a) return b != nullptr;
  if (!b) return false;
  return *a < *b;
}
inline ValuePtr make_value(Blob b) { return std::make_shared<const Blob>(std::move(b)); }
std::string route_string(const Route& r);
std::uint64_t hash_words(std::uint64_t h, const std::uint64_t* p, std::size_t n);

}  // namespace bobw::sim
