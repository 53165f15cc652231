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
#include <functional>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "bobw/field.hpp"
#include "bobw/sharing.hpp"
#include "bobw/sim/simulator.hpp"
#include "bobw/structures.hpp"

namespace bobw::proto {

using sim::Blob;
using sim::Message;
using sim::MsgKind;
using sim::Route;
using sim::Tick;
using sim::ValuePtr;

// Steps of the reference ABA on a same-input synchronous run (worst case, input 1).
constexpr int kAbaSyncSteps = 5;

// Protocol deadlines in ticks.
struct Timing {
  int n = 0;
  Tick delta = 1;
  int k = kAbaSyncSteps;

  Tick sba() const { return 3 * n * delta; }
  Tick bc() const { return 3 * delta + sba(); }
  Tick aba() const { return k * delta; }
  Tick ba() const { return bc() + aba(); }
  Tick vss() const { return 2 * delta + 2 * bc() + ba(); }
  Tick acs() const { return vss() + 2 * ba(); }
  Tick mult() const { return acs() + 2 * delta; }
  Tick preprocessing() const { return acs() + mult(); }
  Tick cireval_bound(int depth) const { return (30 * n + depth + 6 * k + 38) * delta; }
};

// Everything the honest code of one run shares: structures, field, timing.
struct Context {
  Context(AdversaryStructure zs_, AdversaryStructure za_, PrimeField f, Tick delta, bool batching = true)
      : n(zs_.n()), zs(std::move(zs_)), za(std::move(za_)), spec(zs), field(f),
        ok_batching(batching), timing{n, delta, kAbaSyncSteps} {}
  int n;
  AdversaryStructure zs;
  AdversaryStructure za;
  SharingSpec spec;
  PrimeField field;
  bool ok_batching;
  Timing timing;
  Tick delta() const { return timing.delta; }
};

class Node;

// Per-party execution environment: owns the party's protocol tree.
class Runtime {
 public:
  Runtime(const Context& ctx, sim::Simulator& sim, PartyId self);
  ~Runtime();

  const Context& ctx() const { return ctx_; }
  sim::Simulator& sim() { return sim_; }
  PartyId self() const { return self_; }
  bool corrupt() const { return sim_.corrupt_set().contains(self_); }
  const sim::Strategy* strategy() const { return sim_.strategy(self_); }
  std::mt19937_64& rng() { return rng_; }
  Tick now() const { return sim_.now(); }

  void set_root(std::unique_ptr<Node> root);
  Node* root() { return root_.get(); }
  void halt() { sim_.halt(self_); }

 private:
  const Context& ctx_;
  sim::Simulator& sim_;
  PartyId self_;
  std::mt19937_64 rng_;
  std::unique_ptr<Node> root_;
};

class Node {
 public:
  Node(Runtime& rt, Route route) : rt_(rt), route_(std::move(route)) {}
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // `m.route` starts with this node's route.
  virtual void receive(PartyId from, const Message& m) = 0;
  const Route& route() const { return route_; }

 protected:
  PartyId self() const { return rt_.self(); }
  int n() const { return rt_.ctx().n; }
  const Context& ctx() const { return rt_.ctx(); }
  const PrimeField& field() const { return rt_.ctx().field; }
  Tick now() const { return rt_.now(); }
  Tick delta() const { return rt_.ctx().delta(); }
  PartySet everyone() const { return PartySet::all(n()); }

  int depth() const { return static_cast<int>(route_.size()); }
  bool for_me(const Message& m) const { return static_cast<int>(m.route.size()) == depth(); }
  std::uint32_t next_key(const Message& m) const { return m.route[route_.size()]; }
  Route child_route(std::uint32_t key) const {
    Route r = route_;
    r.push_back(key);
    return r;
  }
  Message make(MsgKind kind) const {
    Message m;
    m.route = route_;
    m.kind = kind;
    return m;
  }
  void send(PartyId to, Message m) { rt_.sim().send(self(), to, std::make_shared<const Message>(std::move(m))); }
  void send_to(PartySet to, Message m) {
    auto p = std::make_shared<const Message>(std::move(m));
    to.for_each([&](PartyId j) { rt_.sim().send(self(), j, p); });
  }
  void send_all(Message m) { rt_.sim().send_all(self(), std::make_shared<const Message>(std::move(m))); }
  void at(Tick t, std::function<void()> fn) { rt_.sim().schedule(self(), t, depth(), std::move(fn)); }
  void probe(const char* label, std::vector<std::int64_t> data) {
    if (rt_.sim().probes_on()) rt_.sim().probe(self(), label, route_, std::move(data));
  }

  Runtime& rt_;
  Route route_;
};

// Children keyed by a 32-bit route component, created on demand.
template <typename T>
class Children {
 public:
  T* find(std::uint32_t key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second.get();
  }
  T* put(std::uint32_t key, std::unique_ptr<T> node) {
    T* raw = node.get();
    map_[key] = std::move(node);
    return raw;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::uint32_t, std::unique_ptr<T>> map_;
};

// Messages for children that do not exist yet, replayed on creation.
class Stash {
 public:
  void hold(std::uint32_t key, PartyId from, const Message& m) {
    held_[key].emplace_back(from, std::make_shared<const Message>(m));
  }
  template <typename F>
  void release(std::uint32_t key, F&& deliver) {
    auto it = held_.find(key);
    if (it == held_.end()) return;
    auto msgs = std::move(it->second);
    held_.erase(it);
    for (auto& [from, m] : msgs) deliver(from, *m);
  }

 private:
  std::unordered_map<std::uint32_t, std::vector<std::pair<PartyId, std::shared_ptr<const Message>>>> held_;
};

// Packs up to four small fields into one route key.
constexpr std::uint32_t pack_key(std::uint32_t kind, std::uint32_t a = 0, std::uint32_t b = 0, std::uint32_t c = 0) {
  return (kind << 28) | ((a & 0xFFFU) << 16) | ((b & 0xFFU) << 8) | (c & 0xFFU);
}

std::uint64_t route_tag(const Route& r);

}  // namespace bobw::proto
