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

#include "bobw/sim/simulator.hpp"

#include <sstream>
#include <stdexcept>

namespace bobw::sim {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Tick uniform(std::mt19937_64& rng, Tick lo, Tick hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<Tick>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  auto open = s.find('(');
  if (open == std::string::npos) return out;
  if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
  std::string body = s.substr(open + 1, s.rfind(')') - open - 1);
  std::string cur;
  for (char c : body) {
    if (c == ';') { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

}  // namespace

SchedulerStrategy SchedulerStrategy::parse(const std::string& s) {
  SchedulerStrategy st;
  std::string base = s.substr(0, s.find('('));
  // Arguments are separated by ';' at the top level and ',' inside lists.
  std::string norm = s;
  if (base == "uniform") {
    for (char& c : norm) if (c == ',') c = ';';
  }
  auto args = split_args(norm);
  if (base == "eventual") {
    st.kind = Kind::kEventual;
  } else if (base == "uniform") {
    st.kind = Kind::kUniform;
    if (args.size() == 2) { st.lo = std::stoll(args[0]); st.hi = std::stoll(args[1]); }
  } else if (base == "max-delay") {
    st.kind = Kind::kMaxDelay;
    if (args.size() == 1) st.hi = std::stoll(args[0]);
  } else if (base == "targeted") {
    st.kind = Kind::kTargeted;
    if (args.size() != 2) throw std::invalid_argument("targeted(delay;p1,p2,...) expected");
    st.victim_delay = std::stoll(args[0]);
    std::stringstream ss(args[1]);
    std::string item;
    while (std::getline(ss, item, ',')) st.victims.insert(std::stoi(item) - 1);
  } else {
    throw std::invalid_argument("unknown scheduler strategy '" + s + "'");
  }
  if (st.lo < 1 || st.hi < 1) throw std::invalid_argument("scheduler delays must be positive");
  return st;
}

std::string SchedulerStrategy::name() const {
  switch (kind) {
    case Kind::kEventual: return "eventual";
    case Kind::kUniform: return "uniform(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
    case Kind::kMaxDelay: return "max-delay(" + std::to_string(hi) + ")";
    case Kind::kTargeted: {
      std::string v;
      victims.for_each([&](PartyId p) { v += (v.empty() ? "" : ",") + std::to_string(p + 1); });
      return "targeted(" + std::to_string(victim_delay) + ";" + v + ")";
    }
  }
  return "?";
}

Simulator::Simulator(int n, NetConfig cfg, std::uint64_t seed)
    : n_(n), cfg_(cfg), seed_(seed), rng_(seed), receivers_(n), strategy_(n) {
  if (cfg_.delta < 1) throw std::invalid_argument("delta must be at least one tick");
}

Tick Simulator::pick_delay(PartyId from, PartyId to) {
  const Tick d = cfg_.delta;
  if (cfg_.mode == NetworkMode::kSync) return d;
  const auto& s = cfg_.sched;
  const Strategy* st = strategy_[from].get();
  if (st && st->delays_max()) return s.hi * d;
  switch (s.kind) {
    case SchedulerStrategy::Kind::kEventual:
      return rng_() % 10 == 0 ? uniform(rng_, 1, 2 * s.hi * d) : uniform(rng_, 1, 2 * d);
    case SchedulerStrategy::Kind::kUniform:
      return uniform(rng_, s.lo, s.hi * d);
    case SchedulerStrategy::Kind::kMaxDelay:
      return corrupt_.contains(from) ? 1 : s.hi * d;
    case SchedulerStrategy::Kind::kTargeted:
      return (s.victims.contains(to) ? s.victim_delay * d : 0) + uniform(rng_, 1, d);
  }
  return d;
}

std::uint32_t Simulator::alloc_slot() {
  if (!free_.empty()) {
    std::uint32_t s = free_.back();
    free_.pop_back();
    return s;
  }
  slots_.emplace_back();
  return static_cast<std::uint32_t>(slots_.size() - 1);
}

void Simulator::send(PartyId from, PartyId to, const MessagePtr& m) {
  if (halted(from)) return;
  MessagePtr out = m;
  if (const Strategy* st = strategy_[from].get()) {
    out = st->transform(to, now_, m);
    if (!out) return;
  }
  const std::uint32_t slot = alloc_slot();
  Slot& s = slots_[slot];
  s.env = Envelope{from, to, now_, now_ + pick_delay(from, to), seq_++, std::move(out)};
  s.timer_party = -1;
  const auto k = static_cast<std::size_t>(s.env.msg->kind);
  const std::size_t bytes = s.env.msg->encoded_bytes();
  env_by_kind_[k] += 1;
  bytes_by_kind_[k] += bytes;
  if (trace_on_) record(TraceEvent::Type::kSend, s.env);
  buckets_[s.env.deliver].deliveries.push_back(slot);
}

void Simulator::send_all(PartyId from, const MessagePtr& m) {
  for (PartyId to = 0; to < n_; ++to) send(from, to, m);
}

void Simulator::schedule(PartyId p, Tick at, int depth, std::function<void()> fn) {
  if (at < now_) at = now_;
  const std::uint32_t slot = alloc_slot();
  Slot& s = slots_[slot];
  s.env.msg.reset();
  s.timer_party = p;
  s.fn = std::move(fn);
  auto& timers = buckets_[at].timers;
  timers.push_back(TimerKey{-depth, seq_++, slot});
  std::push_heap(timers.begin(), timers.end(), std::greater<>());
}

std::optional<int> Simulator::coin(PartyId querier, std::uint64_t tag, std::int64_t round) {
  const std::uint64_t key = splitmix(tag ^ splitmix(static_cast<std::uint64_t>(round)));
  if (corrupt_.contains(querier)) {
    if (!coin_revealed_.contains(key)) return std::nullopt;
  } else {
    coin_revealed_[key] = true;
  }
  return static_cast<int>(splitmix(key ^ splitmix(seed_ + 0x5bd1e995ULL)) & 1U);
}

void Simulator::probe(PartyId p, std::string label, const Route& route, std::vector<std::int64_t> data) {
  if (!probes_on_) return;
  probes_.push_back(Probe{now_, p, std::move(label), route, std::move(data)});
}

void Simulator::record(TraceEvent::Type type, const Envelope& e) {
  TraceEvent ev;
  ev.t = type == TraceEvent::Type::kSend ? e.sent : e.deliver;
  ev.type = type;
  ev.from = e.from;
  ev.to = e.to;
  ev.proto = std::string(kind_name(e.msg->kind)) + "@" + route_string(e.msg->route);
  ev.digest = e.msg->digest();
  trace_.push_back(std::move(ev));
}

void Simulator::fire(std::uint32_t slot) {
  Slot& s = slots_[slot];
  if (s.timer_party >= 0) {
    auto fn = std::move(s.fn);
    const PartyId p = s.timer_party;
    s.fn = nullptr;
    free_.push_back(slot);
    if (!halted(p)) {
      last_event_ = now_;
      fn();
    }
    return;
  }
  Envelope env = std::move(s.env);
  free_.push_back(slot);
  if (halted(env.to)) return;
  last_event_ = now_;
  const std::uint64_t words[4] = {static_cast<std::uint64_t>(env.deliver), static_cast<std::uint64_t>(env.from),
                                  static_cast<std::uint64_t>(env.to), env.msg->digest()};
  trace_hash_ = hash_words(trace_hash_, words, 4);
  if (trace_on_) record(TraceEvent::Type::kDeliver, env);
  if (deliver_observer_) deliver_observer_(env);
  if (receivers_[env.to]) receivers_[env.to](env);
}

bool Simulator::run() {
  // Every delay is at least one tick, so a tick's deliveries are final once it starts;
  // only timers can still be added to the current tick.
  while (!buckets_.empty()) {
    auto it = buckets_.begin();
    if (it->first > cfg_.budget) {
      timed_out_ = true;
      buckets_.clear();
      break;
    }
    now_ = it->first;
    Bucket& b = it->second;
    for (std::size_t i = 0; i < b.deliveries.size(); ++i) fire(b.deliveries[i]);
    while (!b.timers.empty()) {
      std::pop_heap(b.timers.begin(), b.timers.end(), std::greater<>());
      const std::uint32_t slot = b.timers.back().slot;
      b.timers.pop_back();
      fire(slot);
    }
    buckets_.erase(it);
  }
  return !timed_out_;
}

NetStats Simulator::stats() const {
  NetStats st;
  for (std::size_t k = 0; k < env_by_kind_.size(); ++k) {
    if (!env_by_kind_[k]) continue;
    const std::string fam = family(static_cast<MsgKind>(k));
    st.envelopes += env_by_kind_[k];
    st.bytes += bytes_by_kind_[k];
    st.envelopes_by_family[fam] += env_by_kind_[k];
    st.bytes_by_family[fam] += bytes_by_kind_[k];
  }
  return st;
}

std::string trace_to_jsonl(const std::vector<TraceEvent>& trace) {
  std::ostringstream os;
  char buf[32];
  for (const auto& e : trace) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(e.digest));
    os << "{\"t\":" << e.t << ",\"kind\":\"" << (e.type == TraceEvent::Type::kSend ? "send" : "deliver")
       << "\",\"from\":" << e.from + 1 << ",\"to\":" << e.to + 1 << ",\"proto\":\"" << e.proto
       << "\",\"payload-digest\":\"" << buf << "\"}\n";
  }
  return os.str();
}

}  // namespace bobw::sim
