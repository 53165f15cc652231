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

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "bobw/party_set.hpp"
#include "bobw/sim/message.hpp"
#include "bobw/sim/strategy.hpp"

namespace bobw::sim {

enum class NetworkMode { kSync, kAsync };

// How the adversarial scheduler picks asynchronous delays (in ticks).
struct SchedulerStrategy {
  enum class Kind { kEventual, kUniform, kMaxDelay, kTargeted };
  Kind kind = Kind::kEventual;
  Tick lo = 1;
  Tick hi = 5;              // in units of delta
  PartySet victims;         // targeted: receivers that are starved
  Tick victim_delay = 0;    // targeted: extra delay in units of delta

  // "eventual", "uniform(a,b)", "max-delay", "max-delay(d)", "targeted(d;1,2)".
  static SchedulerStrategy parse(const std::string& s);
  std::string name() const;
};

struct NetConfig {
  NetworkMode mode = NetworkMode::kSync;
  Tick delta = 1;  // ticks per delta
  SchedulerStrategy sched;
  Tick budget = 1'000'000;
};

struct Envelope {
  PartyId from = 0;
  PartyId to = 0;
  Tick sent = 0;
  Tick deliver = 0;
  std::uint64_t seq = 0;
  MessagePtr msg;
};

struct TraceEvent {
  enum class Type : std::uint8_t { kSend, kDeliver, kProbe };
  Tick t = 0;
  Type type = Type::kSend;
  PartyId from = -1;
  PartyId to = -1;
  std::string proto;
  std::uint64_t digest = 0;
};

// Protocol-level observation (decision, output, rule used, ...).
struct Probe {
  Tick t = 0;
  PartyId party = 0;
  std::string label;
  Route route;
  std::vector<std::int64_t> data;
};

struct NetStats {
  std::uint64_t envelopes = 0;
  std::uint64_t bytes = 0;
  std::map<std::string, std::uint64_t> envelopes_by_family;
  std::map<std::string, std::uint64_t> bytes_by_family;
};

class Simulator {
 public:
  using Receiver = std::function<void(const Envelope&)>;

  Simulator(int n, NetConfig cfg, std::uint64_t seed);
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  int n() const { return n_; }
  const NetConfig& config() const { return cfg_; }
  Tick now() const { return now_; }
  Tick delta() const { return cfg_.delta; }
  std::uint64_t seed() const { return seed_; }

  void set_receiver(PartyId p, Receiver r) { receivers_[p] = std::move(r); }
  void corrupt(PartyId p, std::shared_ptr<const Strategy> s) { strategy_[p] = std::move(s); corrupt_.insert(p); }
  PartySet corrupt_set() const { return corrupt_; }
  const Strategy* strategy(PartyId p) const { return strategy_[p].get(); }

  void send(PartyId from, PartyId to, const MessagePtr& m);
  void send_all(PartyId from, const MessagePtr& m);
  // Timers at the same tick fire deeper-first so sub-protocol results are visible to parents.
  void schedule(PartyId p, Tick at, int depth, std::function<void()> fn);
  void halt(PartyId p) { halted_.insert(p); }
  bool halted(PartyId p) const { return halted_.contains(p); }

  // Common coin for (tag, round). Corrupt queries see nothing until an honest party asked.
  std::optional<int> coin(PartyId querier, std::uint64_t tag, std::int64_t round);

  void enable_trace(bool on) { trace_on_ = on; }
  void enable_probes(bool on) { probes_on_ = on; }
  bool probes_on() const { return probes_on_; }
  void probe(PartyId p, std::string label, const Route& route, std::vector<std::int64_t> data);
  void on_deliver(Receiver obs) { deliver_observer_ = std::move(obs); }

  // Runs to quiescence or budget. Returns false when the budget cut the run short.
  bool run();
  bool timed_out() const { return timed_out_; }
  Tick last_event_time() const { return last_event_; }

  const std::vector<TraceEvent>& trace() const { return trace_; }
  const std::vector<Probe>& probes() const { return probes_; }
  NetStats stats() const;
  std::uint64_t trace_hash() const { return trace_hash_; }
  std::mt19937_64& rng() { return rng_; }

 private:
  struct TimerKey {
    std::int32_t order;
    std::uint64_t seq;
    std::uint32_t slot;
    bool operator>(const TimerKey& o) const { return order != o.order ? order > o.order : seq > o.seq; }
  };
  // Events of one tick: deliveries in send order, then timers deeper-first.
  struct Bucket {
    std::vector<std::uint32_t> deliveries;
    std::vector<TimerKey> timers;
  };
  struct Slot {
    Envelope env;
    PartyId timer_party = -1;
    std::function<void()> fn;
  };

  Tick pick_delay(PartyId from, PartyId to);
  std::uint32_t alloc_slot();
  void fire(std::uint32_t slot);
  void record(TraceEvent::Type type, const Envelope& e);

  int n_;
  NetConfig cfg_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  Tick now_ = 0;
  Tick last_event_ = 0;
  std::uint64_t seq_ = 0;
  std::map<Tick, Bucket> buckets_;
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_;
  std::vector<Receiver> receivers_;
  std::vector<std::shared_ptr<const Strategy>> strategy_;
  PartySet corrupt_;
  PartySet halted_;
  std::unordered_map<std::uint64_t, bool> coin_revealed_;
  bool trace_on_ = false;
  bool probes_on_ = false;
  bool timed_out_ = false;
  std::vector<TraceEvent> trace_;
  std::vector<Probe> probes_;
  std::uint64_t trace_hash_ = 0xcbf29ce484222325ULL;
  std::array<std::uint64_t, 16> env_by_kind_{};
  std::array<std::uint64_t, 16> bytes_by_kind_{};
  Receiver deliver_observer_;
};

std::string trace_to_jsonl(const std::vector<TraceEvent>& trace);

}  // namespace bobw::sim
