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

#include "bobw/sim/message.hpp"

namespace bobw::sim {

const char* kind_name(MsgKind k) {
  switch (k) {
    case MsgKind::kPing: return "ping";
    case MsgKind::kAcastInit: return "acast.init";
    case MsgKind::kAcastEcho: return "acast.echo";
    case MsgKind::kAcastReady: return "acast.ready";
    case MsgKind::kSbaPref: return "sba.pref";
    case MsgKind::kSbaPropose: return "sba.propose";
    case MsgKind::kSbaKing: return "sba.king";
    case MsgKind::kAbaEst: return "aba.est";
    case MsgKind::kAbaAux: return "aba.aux";
    case MsgKind::kAbaTerm: return "aba.term";
    case MsgKind::kRecShare: return "rec.share";
    case MsgKind::kVssShare: return "vss.share";
    case MsgKind::kVssPcheck: return "vss.pcheck";
    case MsgKind::kReady: return "ready";
  }
  return "?";
}

const char* family(MsgKind k) {
  switch (k) {
    case MsgKind::kAcastInit:
    case MsgKind::kAcastEcho:
    case MsgKind::kAcastReady: return "acast";
    case MsgKind::kSbaPref:
    case MsgKind::kSbaPropose:
    case MsgKind::kSbaKing: return "sba";
    case MsgKind::kAbaEst:
    case MsgKind::kAbaAux:
    case MsgKind::kAbaTerm: return "aba";
    case MsgKind::kRecShare: return "rec";
    case MsgKind::kVssShare:
    case MsgKind::kVssPcheck: return "vss";
    case MsgKind::kReady: return "ready";
    case MsgKind::kPing: return "ping";
  }
  return "?";
}

std::size_t Message::encoded_bytes() const {
  std::size_t b = 1;
  b += 1 + 4 * route.size();
  b += 1 + 8 * ints.size();
  b += 1 + 8 * elems.size();
  b += 1 + (value ? 8 * value->size() : 0);
  return b;
}

std::uint64_t hash_words(std::uint64_t h, const std::uint64_t* p, std::size_t n) {
  // FNV-1a over 64-bit words.
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Message::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::uint64_t k = static_cast<std::uint64_t>(kind);
  h = hash_words(h, &k, 1);
  for (std::uint32_t r : route) {
    std::uint64_t w = r;
    h = hash_words(h, &w, 1);
  }
  for (std::int64_t v : ints) {
    std::uint64_t w = static_cast<std::uint64_t>(v);
    h = hash_words(h, &w, 1);
  }
  h = hash_words(h, elems.data(), elems.size());
  if (value) h = hash_words(h, value->data(), value->size());
  return h;
}

std::string route_string(const Route& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(r[i]);
  }
  return s;
}

}  // namespace bobw::sim
