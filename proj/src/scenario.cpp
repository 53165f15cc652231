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

#include "bobw/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bobw {

const std::vector<std::string> kProtocols = {"acast", "sba",  "aba", "bc",   "ba",   "rec",
                                             "beaver", "vss", "acs", "mult", "preprocessing", "cireval"};

namespace {

using sim::NetworkMode;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

PartySet parse_set(const Json& j, int n, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected a list of party indices");
  PartySet s;
  for (const Json& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + ": party indices must be integers");
    const int i = v.get<int>();
    if (i < 1 || i > n) fail(std::string(what) + ": party index " + std::to_string(i) + " out of range");
    s.insert(i - 1);
  }
  return s;
}

Json set_json(PartySet s) {
  Json a = Json::array();
  s.for_each([&](PartyId p) { a.push_back(p + 1); });
  return a;
}

AdversaryStructure parse_structure(const Json& j, int n, const char* what) {
  if (j.is_object() && j.contains("threshold")) {
    return AdversaryStructure::threshold(n, j.at("threshold").get<int>(), what);
  }
  if (!j.is_array()) fail(std::string(what) + ": expected a list of sets or {\"threshold\": t}");
  std::vector<PartySet> sets;
  for (const Json& s : j) sets.push_back(parse_set(s, n, what));
  return AdversaryStructure(n, std::move(sets), what);
}

Json structure_json(const AdversaryStructure& z) {
  Json a = Json::array();
  for (PartySet s : z.sets()) a.push_back(set_json(s));
  return a;
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected a list of integers");
  std::vector<std::int64_t> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + ": expected integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::vector<std::uint64_t> parse_seeds(const Json& j) {
  std::vector<std::uint64_t> out;
  if (j.is_number_unsigned() || j.is_number_integer()) {
    out.push_back(j.get<std::uint64_t>());
  } else if (j.is_array()) {
    for (const Json& v : j) out.push_back(v.get<std::uint64_t>());
  } else if (j.is_object()) {
    const auto first = j.value("first", std::uint64_t{0});
    const auto count = j.at("count").get<std::uint64_t>();
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(first + k);
  } else {
    fail("seeds: expected an integer, a list or {\"first\", \"count\"}");
  }
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

bool needs_con(const std::string& protocol) {
  static const std::set<std::string> kCon = {"vss", "acs", "mult", "preprocessing", "cireval"};
  return kCon.contains(protocol);
}

}  // namespace

Scenario Scenario::from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) fail("scenario: expected a JSON object");
  Scenario s;
  s.n = j.at("n").get<int>();
  if (s.n < 2 || s.n > kMaxParties) fail("n out of range");
  s.zs = parse_structure(j.at("zs"), s.n, "zs");
  s.za = parse_structure(j.value("za", Json::array()), s.n, "za");
  if (j.contains("p")) {
    const Json& p = j.at("p");
    s.prime = p.is_string() ? std::stoull(p.get<std::string>()) : p.get<std::uint64_t>();
  }
  const std::string mode = j.value("mode", std::string("sync"));
  if (mode == "sync") s.net.mode = NetworkMode::kSync;
  else if (mode == "async") s.net.mode = NetworkMode::kAsync;
  else fail("mode must be sync or async");
  s.net.sched = sim::SchedulerStrategy::parse(j.value("scheduler", std::string("eventual")));
  s.net.budget = j.value("budget", sim::Tick{1'000'000});
  s.net.delta = j.value("delta", sim::Tick{1});
  if (s.net.delta < 1) fail("delta must be positive");
  s.corrupt = parse_set(j.value("corrupt", Json::array()), s.n, "corrupt");
  s.strategy = sim::StrategySpec::parse(j.value("strategy", std::string("honest")));
  s.protocol = j.at("protocol").get<std::string>();
  if (std::find(kProtocols.begin(), kProtocols.end(), s.protocol) == kProtocols.end())
    fail("unknown protocol '" + s.protocol + "'");
  const int sender = j.value("sender", j.value("dealer", 1));
  if (sender < 1 || sender > s.n) fail("sender out of range");
  s.sender = sender - 1;
  s.sender_start = j.value("sender_start", sim::Tick{0});
  if (s.sender_start < 0) fail("sender_start must be non-negative");
  if (j.contains("value")) s.value = int_list(j.at("value"), "value");
  if (j.contains("inputs")) s.inputs = int_list(j.at("inputs"), "inputs");
  if (j.contains("secrets")) s.inputs = int_list(j.at("secrets"), "secrets");
  if (j.contains("x")) s.x = int_list(j.at("x"), "x");
  if (j.contains("y")) s.y = int_list(j.at("y"), "y");
  s.count = j.value("count", 1);
  if (j.contains("circuit")) {
    s.circuit_path = j.at("circuit").get<std::string>();
    std::filesystem::path p(s.circuit_path);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    s.circuit = Circuit::load(p.string(), s.n);
  }
  if (j.contains("seeds")) s.seeds = parse_seeds(j.at("seeds"));
  s.ok_batching = j.value("ok_batching", true);
  if (j.contains("checks")) s.checks = j.at("checks").get<std::vector<std::string>>();
  return s;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(path + ": " + e.what());
  }
  return from_json(j, std::filesystem::path(path).parent_path().string());
}

Json Scenario::to_json() const {
  Json j;
  j["n"] = n;
  j["zs"] = structure_json(zs);
  j["za"] = structure_json(za);
  j["p"] = std::to_string(prime);
  j["mode"] = net.mode == NetworkMode::kSync ? "sync" : "async";
  j["scheduler"] = net.sched.name();
  j["budget"] = net.budget;
  j["delta"] = net.delta;
  j["corrupt"] = set_json(corrupt);
  j["strategy"] = strategy.name();
  j["protocol"] = protocol;
  j["sender"] = sender + 1;
  j["sender_start"] = sender_start;
  j["value"] = value;
  j["inputs"] = inputs;
  j["x"] = x;
  j["y"] = y;
  j["count"] = count;
  if (!circuit_path.empty()) j["circuit"] = circuit_path;
  j["ok_batching"] = ok_batching;
  j["checks"] = checks;
  return j;
}

proto::Context Scenario::context() const {
  return proto::Context(zs, za, PrimeField(prime), net.delta, ok_batching);
}

Json Validation::to_json() const {
  Json j;
  j["ok"] = ok;
  j["con"] = {{"ok", con.ok}, {"clause", to_string(con.failed)}, {"detail", con.detail}};
  Json w = Json::array();
  for (PartySet s : con.witness) w.push_back(set_json(s));
  j["con"]["witness"] = w;
  j["errors"] = errors;
  return j;
}

Validation validate(const Scenario& s) {
  Validation v;
  auto error = [&](std::string e) {
    v.ok = false;
    v.errors.push_back(std::move(e));
  };
  if (!is_prime(s.prime)) error("p = " + std::to_string(s.prime) + " is not prime");
  if (s.zs.size() == 0) error("zs is empty");
  if (!q_condition(PartySet::all(s.n), s.zs, 3)) error("zs violates Q^(3)");
  if (needs_con(s.protocol)) {
    v.con = check_con(s.zs, s.za);
    if (!v.con.ok) error(std::string("Con fails on clause ") + to_string(v.con.failed) + ": " + v.con.detail);
  }
  if (s.net.mode == NetworkMode::kSync && !s.zs.contains(s.corrupt))
    error("corrupt set " + s.corrupt.to_string() + " is not in zs (sync mode)");
  if (s.net.mode == NetworkMode::kAsync && !s.za.contains(s.corrupt))
    error("corrupt set " + s.corrupt.to_string() + " is not in za (async mode)");
  const auto per_party = [&](const std::vector<std::int64_t>& in, const char* what) {
    if (static_cast<int>(in.size()) != s.n) error(std::string(what) + ": expected one entry per party");
  };
  const std::string& p = s.protocol;
  if (p == "sba" || p == "acs" || p == "cireval") per_party(s.inputs, "inputs");
  if (p == "aba" || p == "ba") {
    per_party(s.inputs, "inputs");
    for (auto b : s.inputs)
      if (b != 0 && b != 1) error("inputs: bits expected");
  }
  if ((p == "rec" || p == "vss") && s.inputs.empty()) error("secrets: at least one value expected");
  if (p == "beaver" || p == "mult") {
    if (s.x.empty() || s.x.size() != s.y.size()) error("x, y: equal non-empty lists expected");
  }
  if (p == "preprocessing" && s.count < 1) error("count must be positive");
  if (p == "cireval" && !s.circuit) error("cireval needs a circuit");
  if (s.net.budget < 1) error("budget must be positive");
  if (s.seeds.empty()) error("no seeds");
  return v;
}

// ---------------------------------------------------------------------------
// Running one seed

namespace {

struct Checks {
  std::map<std::string, bool>& out;
  const std::vector<std::string>& wanted;
  void operator()(const std::string& name, bool ok) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) return;
    auto [it, fresh] = out.emplace(name, ok);
    if (!fresh) it->second = it->second && ok;
  }
};

// Per ordered pair: deliveries respect the sync bound and FIFO order.
struct DeliveryMonitor {
  Tick delta = 1;
  bool ok = true;
  std::map<std::pair<PartyId, PartyId>, Tick> last_sent;
  void operator()(const sim::Envelope& e) {
    if (e.deliver - e.sent > delta) ok = false;
    auto [it, fresh] = last_sent.emplace(std::make_pair(e.from, e.to), e.sent);
    if (!fresh) {
      if (e.sent < it->second) ok = false;
      it->second = e.sent;
    }
  }
};

Json value_json(const ValuePtr& v) {
  if (!v) return nullptr;
  return Json(*v);
}

template <typename Out, typename F>
Tick latest(const std::vector<Out>& out, PartySet honest, F time) {
  Tick t = -1;
  honest.for_each([&](PartyId p) { t = std::max(t, time(out[p])); });
  return t;
}

std::vector<SecretSharing> share_all(const proto::Context& ctx, const std::vector<Fe>& vals, std::mt19937_64& rng) {
  std::vector<SecretSharing> out;
  for (Fe v : vals) out.push_back(share(v, ctx.spec, ctx.field, rng));
  return out;
}

std::vector<Fe> to_field(const PrimeField& f, const std::vector<std::int64_t>& in) {
  std::vector<Fe> out;
  for (auto v : in) out.push_back(f.from_int(v));
  return out;
}

}  // namespace

bool SeedOutcome::ok() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& kv) { return kv.second; });
}

Json SeedOutcome::to_json() const {
  Json j;
  j["seed"] = seed;
  j["timed_out"] = timed_out;
  j["end"] = end;
  j["completion"] = completion;
  j["envelopes"] = stats.envelopes;
  j["bits"] = stats.bytes * 8;
  j["trace_hash"] = hex64(trace_hash);
  j["invariants"] = invariants;
  j["result"] = result;
  j["ok"] = ok();
  return j;
}

SeedOutcome run_seed(const Scenario& s, std::uint64_t seed, bool keep_trace) {
  const proto::Context ctx = s.context();
  const PrimeField& f = ctx.field;
  const proto::Timing& T = ctx.timing;
  const Tick D = ctx.delta();
  const int n = s.n;
  const bool sync = s.net.mode == NetworkMode::kSync;
  const PartySet honest = PartySet::all(n) - s.corrupt;

  SeedOutcome o;
  o.seed = seed;
  Checks check{o.invariants, s.checks};

  DeliveryMonitor mon;
  mon.delta = D;
  std::vector<sim::MessagePtr> to_corrupt;
  RunOptions opt;
  opt.net = s.net;
  opt.seed = seed;
  opt.corrupt = s.corrupt;
  opt.strategy = s.strategy;
  opt.trace = keep_trace;
  const bool scan_privacy = s.protocol == "vss" && !s.corrupt.empty() && !s.corrupt.contains(s.sender);
  opt.observer = [&](const sim::Envelope& e) {
    mon(e);
    if (scan_privacy && s.corrupt.contains(e.to)) to_corrupt.push_back(e.msg);
  };
  // Harness-side randomness (ground-truth sharings and triples) is independent of the network's.
  std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);

  auto finish = [&](const RunInfo& info) {
    o.timed_out = info.timed_out;
    o.end = info.end;
    o.stats = info.stats;
    o.trace_hash = info.trace_hash;
    o.trace = info.trace;
    check("no-timeout", !info.timed_out);
    if (sync) check("sync-delivery", mon.ok);
  };
  // All honest parties have an output.
  auto all_have = [&](auto& out, auto has) {
    bool ok = true;
    honest.for_each([&](PartyId p) { ok = ok && has(out[p]); });
    return ok;
  };
  auto spread_ok = [&](auto& out, auto has, auto time) {
    Tick lo = -1, hi = -1;
    bool any = false, all = true;
    honest.for_each([&](PartyId p) {
      if (!has(out[p])) { all = false; return; }
      const Tick t = time(out[p]);
      lo = any ? std::min(lo, t) : t;
      hi = any ? std::max(hi, t) : t;
      any = true;
    });
    return !any || (all && hi - lo <= 2 * D);
  };

  const std::string& p = s.protocol;
  if (p == "acast") {
    const ValuePtr m = sim::make_value(sim::Blob(s.value.begin(), s.value.end()));
    auto r = run_acast(s.zs, s.sender, m, opt);
    finish(r);
    std::vector<ValuePtr> vals;
    honest.for_each([&](PartyId q) {
      if (!r.out[q].has) return;
      if (std::none_of(vals.begin(), vals.end(), [&](const ValuePtr& v) { return sim::same_value(v, r.out[q].value); }))
        vals.push_back(r.out[q].value);
    });
    check("agreement", vals.size() <= 1);
    const auto has = [](auto& x) { return x.has; };
    const auto time = [](auto& x) { return x.time; };
    if (!s.corrupt.contains(s.sender)) {
      bool ok = true;
      honest.for_each([&](PartyId q) { ok = ok && r.out[q].has && sim::same_value(r.out[q].value, m); });
      check("validity", ok);
      if (sync) {
        bool exact = true;
        honest.for_each([&](PartyId q) { exact = exact && r.out[q].time == 3 * D; });
        check("deadline", exact);
      }
    }
    if (sync) check("consistency-window", spread_ok(r.out, has, time));
    o.completion = latest(r.out, honest, time);
    o.result["value"] = vals.empty() ? Json(nullptr) : value_json(vals[0]);
    o.result["outputs"] = static_cast<int>(std::count_if(r.out.begin(), r.out.end(), has));
  } else if (p == "sba") {
    std::vector<ValuePtr> in;
    for (auto v : s.inputs) in.push_back(sim::make_value({static_cast<std::uint64_t>(v)}));
    auto r = run_sba(s.zs, in, opt);
    finish(r);
    bool at_deadline = true;
    honest.for_each([&](PartyId q) { at_deadline = at_deadline && r.out[q].has && r.out[q].time == T.sba(); });
    check("output-at-deadline", at_deadline);
    const PartyId h0 = honest.first();
    if (sync) {
      bool same = true;
      honest.for_each([&](PartyId q) { same = same && sim::same_value(r.out[q].value, r.out[h0].value); });
      check("consistency", same);
      bool unanimous = true;
      honest.for_each([&](PartyId q) { unanimous = unanimous && sim::same_value(in[q], in[h0]); });
      if (unanimous) {
        bool valid = true;
        honest.for_each([&](PartyId q) { valid = valid && sim::same_value(r.out[q].value, in[h0]); });
        check("validity", valid);
      }
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.time; });
    o.result["value"] = value_json(r.out[h0].value);
  } else if (p == "bc") {
    const ValuePtr m = sim::make_value(sim::Blob(s.value.begin(), s.value.end()));
    auto r = run_bc(s.zs, s.sender, m, opt, s.sender_start);
    finish(r);
    bool live = true, stable = true;
    std::vector<ValuePtr> nonbot;
    auto note = [&](const ValuePtr& v) {
      if (v && std::none_of(nonbot.begin(), nonbot.end(), [&](const ValuePtr& w) { return sim::same_value(v, w); }))
        nonbot.push_back(v);
    };
    honest.for_each([&](PartyId q) {
      const BcOut& b = r.out[q];
      live = live && b.regular_done && b.regular_time == T.bc();
      if (b.regular) stable = stable && b.has && !b.fallback && sim::same_value(b.value, b.regular);
      note(b.regular);
      if (b.has) note(b.value);
    });
    check("liveness", live);
    check("one-value", nonbot.size() <= 1);
    check("regular-stable", stable);
    const PartyId h0 = honest.first();
    const bool honest_sender = !s.corrupt.contains(s.sender);
    if (sync) {
      bool same = true;
      honest.for_each([&](PartyId q) { same = same && sim::same_value(r.out[q].regular, r.out[h0].regular); });
      check("consistency", same);
      if (honest_sender) {
        bool valid = true;
        honest.for_each([&](PartyId q) { valid = valid && sim::same_value(r.out[q].regular, m); });
        check("validity", valid);
      } else {
        // Fallback outputs, if any, reach every honest party within 2 delta of each other.
        bool any = false;
        honest.for_each([&](PartyId q) { any = any || (r.out[q].has && r.out[q].fallback); });
        if (any) {
          check("fallback-window", spread_ok(r.out, [](auto& x) { return x.has && x.fallback; },
                                             [](auto& x) { return x.time; }));
        } else {
          check("fallback-window", true);
        }
      }
    } else if (honest_sender) {
      bool valid = true;
      honest.for_each([&](PartyId q) { valid = valid && r.out[q].has && sim::same_value(r.out[q].value, m); });
      check("eventual-validity", valid);
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.has ? x.time : x.regular_time; });
    o.result["regular"] = value_json(r.out[h0].regular);
    o.result["value"] = r.out[h0].has ? value_json(r.out[h0].value) : Json(nullptr);
    int fb = 0;
    honest.for_each([&](PartyId q) { fb += r.out[q].has && r.out[q].fallback; });
    o.result["fallback_outputs"] = fb;
  } else if (p == "aba" || p == "ba") {
    std::vector<int> in(s.inputs.begin(), s.inputs.end());
    auto r = p == "aba" ? run_aba(s.zs, in, opt) : run_ba(s.zs, in, opt);
    finish(r);
    const auto has = [](auto& x) { return x.has; };
    check("termination", all_have(r.out, has));
    const PartyId h0 = honest.first();
    bool agree = true;
    honest.for_each([&](PartyId q) { agree = agree && (!r.out[q].has || r.out[q].value == r.out[h0].value); });
    check("agreement", agree);
    bool unanimous = true;
    honest.for_each([&](PartyId q) { unanimous = unanimous && in[q] == in[h0]; });
    if (unanimous) {
      bool valid = true;
      honest.for_each([&](PartyId q) { valid = valid && r.out[q].value == in[h0]; });
      check("validity", valid);
      if (p == "ba") {
        bool vs = true;
        honest.for_each([&](PartyId q) { vs = vs && r.vstar[q] == in[h0]; });
        check("vstar-validity", vs);
      }
    }
    if (sync && (p == "ba" || unanimous)) {
      const Tick deadline = p == "ba" ? T.ba() : T.aba();
      bool ok = true;
      honest.for_each([&](PartyId q) { ok = ok && r.out[q].has && r.out[q].time <= deadline; });
      check("deadline", ok);
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.time; });
    o.result["bit"] = r.out[h0].has ? Json(r.out[h0].value) : Json(nullptr);
  } else if (p == "rec") {
    const auto secrets = to_field(f, s.inputs);
    auto r = run_rec(ctx, share_all(ctx, secrets, rng), opt);
    finish(r);
    check("termination", all_have(r.out, [](auto& x) { return x.has; }));
    bool ok = true;
    honest.for_each([&](PartyId q) { ok = ok && r.out[q].has && r.out[q].value == secrets; });
    check("correct", ok);
    if (sync) {
      bool exact = true;
      honest.for_each([&](PartyId q) { exact = exact && r.out[q].time == D; });
      check("deadline", exact);
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.time; });
    o.result["values"] = r.out[honest.first()].value;
  } else if (p == "beaver" || p == "mult") {
    const auto xs = to_field(f, s.x), ys = to_field(f, s.y);
    const auto u = share_all(ctx, xs, rng), v = share_all(ctx, ys, rng);
    std::vector<PartyOut<ShareBlock>> out;
    std::uint64_t honest_openings = 0;
    if (p == "beaver") {
      std::vector<Fe> av, bv, cv;
      for (std::size_t l = 0; l < xs.size(); ++l) {
        av.push_back(f.random(rng));
        bv.push_back(f.random(rng));
        cv.push_back(f.mul(av.back(), bv.back()));
      }
      auto r = run_beaver(ctx, u, v, share_all(ctx, av, rng), share_all(ctx, bv, rng), share_all(ctx, cv, rng), opt);
      finish(r);
      out = r.out;
    } else {
      auto r = run_mult(ctx, u, v, opt);
      finish(r);
      out = r.out;
      honest_openings = r.honest_openings;
      o.result["openings"] = r.openings;
    }
    check("termination", all_have(out, [](auto& x) { return x.has; }));
    std::vector<const ShareBlock*> views(n, nullptr);
    honest.for_each([&](PartyId q) { if (out[q].has) views[q] = &out[q].value; });
    const Assembled a = assemble(ctx, honest, views);
    bool ok = a.consistent && a.complete && a.values.size() == xs.size();
    for (std::size_t l = 0; ok && l < xs.size(); ++l) ok = a.values[l] == f.mul(xs[l], ys[l]);
    check("correct", ok);
    if (p == "mult") check("privacy-path", honest_openings == 0);
    if (sync) {
      const Tick deadline = p == "beaver" ? D : T.mult();
      bool ok2 = true;
      honest.for_each([&](PartyId q) { ok2 = ok2 && out[q].has && (p == "beaver" ? out[q].time == deadline : out[q].time <= deadline); });
      check("deadline", ok2);
    }
    o.completion = latest(out, honest, [](auto& x) { return x.time; });
    o.result["products"] = a.values;
  } else if (p == "vss") {
    const auto secrets = to_field(f, s.inputs);
    auto r = run_vss(ctx, s.sender, secrets, opt);
    finish(r);
    const bool honest_dealer = !s.corrupt.contains(s.sender);
    std::vector<const ShareBlock*> views(n, nullptr);
    honest.for_each([&](PartyId q) { if (r.out[q].has) views[q] = &r.out[q].shares; });
    const Assembled a = assemble(ctx, honest, views);
    check("commitment", a.consistent);
    const auto has = [](auto& x) { return x.has; };
    const auto time = [](auto& x) { return x.time; };
    if (honest_dealer) {
      check("termination", all_have(r.out, has));
      bool ok = a.complete && a.values == secrets;
      honest.for_each([&](PartyId q) {
        if (!r.out[q].has) return;
        for (int m : ctx.spec.held_by(q))
          for (std::size_t l = 0; l < secrets.size(); ++l) ok = ok && r.out[q].shares.at(m, l) == r.dealt[l].shares[m];
      });
      check("correct", ok);
      if (scan_privacy) {
        // Shares of sets with no corrupt holder never reach a corrupt party.
        bool priv = true;
        for (int m = 0; m < ctx.spec.q(); ++m) {
          if (ctx.spec.set(m).intersects(s.corrupt)) continue;
          for (const auto& msg : to_corrupt) {
            for (std::size_t l = 0; l < secrets.size(); ++l) {
              const Fe sm = r.dealt[l].shares[m];
              for (Fe e : msg->elems) priv = priv && e != sm;
              if (msg->value)
                for (std::uint64_t w : *msg->value) priv = priv && w != sm;
            }
          }
        }
        check("privacy", priv);
      }
      if (sync) {
        bool exact = true;
        honest.for_each([&](PartyId q) { exact = exact && r.out[q].time == T.vss(); });
        check("deadline", exact);
      }
    }
    if (sync) {
      bool all_exact = true;
      honest.for_each([&](PartyId q) { all_exact = all_exact && r.out[q].has && r.out[q].time == T.vss(); });
      check("timing-dichotomy", all_exact || spread_ok(r.out, has, time));
      // With BA output 1, every honest member of each accepted C_m had its share by delta.
      bool gen = true;
      honest.for_each([&](PartyId q) {
        if (r.out[q].ba != 1) return;
        for (int m = 0; m < static_cast<int>(r.out[q].core.size()); ++m)
          (r.out[q].core[m] & honest).for_each([&](PartyId i) {
            const Tick t = r.out[i].share_time[m];
            gen = gen && t >= 0 && t <= D;
          });
      });
      check("gen-vss-sync", gen);
    }
    o.completion = latest(r.out, honest, time);
    o.result["values"] = a.complete ? Json(a.values) : Json(nullptr);
    o.result["ba"] = r.out[honest.first()].ba;
    // Per honest party, the rule that produced each share ('-' where none).
    Json rules = Json::object();
    honest.for_each([&](PartyId q) {
      std::string rs;
      for (char c : r.out[q].rule) rs += c ? c : '-';
      rules[std::to_string(q + 1)] = rs;
    });
    o.result["rules"] = rules;
  } else if (p == "acs") {
    std::vector<std::vector<Fe>> in;
    for (auto v : s.inputs) in.push_back({f.from_int(v)});
    const PartySet q = PartySet::all(n);
    auto r = run_acs(ctx, q, in, opt);
    finish(r);
    check("termination", all_have(r.out, [](auto& x) { return x.has; }));
    const PartyId h0 = honest.first();
    const PartySet cs = r.out[h0].cs;
    bool agree = true;
    honest.for_each([&](PartyId i) { agree = agree && r.out[i].has && r.out[i].cs == cs; });
    check("agreement", agree);
    check("cs-valid", ctx.zs.contains(q - cs) && cs.intersects(honest));
    bool commit = true;
    cs.for_each([&](PartyId j) {
      std::vector<const ShareBlock*> views(n, nullptr);
      honest.for_each([&](PartyId i) {
        if (r.out[i].has && j < static_cast<int>(r.out[i].shares.size())) views[i] = &r.out[i].shares[j];
      });
      const Assembled a = assemble(ctx, honest, views);
      commit = commit && a.consistent && a.complete;
      if (honest.contains(j)) commit = commit && !a.values.empty() && a.values[0] == in[j][0];
    });
    check("commitment", commit);
    if (sync) {
      check("cs-honest", (q & honest).subset_of(cs));
      bool exact = true;
      honest.for_each([&](PartyId i) { exact = exact && r.out[i].time == T.acs(); });
      check("deadline", exact);
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.time; });
    o.result["cs"] = set_json(cs);
  } else if (p == "preprocessing") {
    auto r = run_preprocessing(ctx, s.count, opt);
    finish(r);
    check("termination", all_have(r.out, [](auto& x) { return x.has; }));
    const PartyId h0 = honest.first();
    bool agree = true;
    honest.for_each([&](PartyId i) { agree = agree && r.out[i].cs == r.out[h0].cs; });
    check("agreement", agree);
    std::vector<const ShareBlock*> va(n, nullptr), vb(n, nullptr), vc(n, nullptr);
    honest.for_each([&](PartyId i) {
      if (!r.out[i].has) return;
      va[i] = &r.out[i].a;
      vb[i] = &r.out[i].b;
      vc[i] = &r.out[i].c;
    });
    const Assembled a = assemble(ctx, honest, va), b = assemble(ctx, honest, vb), c = assemble(ctx, honest, vc);
    bool ok = a.consistent && b.consistent && c.consistent && a.complete && b.complete && c.complete &&
              static_cast<int>(c.values.size()) == s.count;
    for (int l = 0; ok && l < s.count; ++l) ok = c.values[l] == f.mul(a.values[l], b.values[l]);
    check("correct", ok);
    if (sync) {
      check("cs-honest", honest.subset_of(r.out[h0].cs));
      bool ok2 = true;
      honest.for_each([&](PartyId i) { ok2 = ok2 && r.out[i].has && r.out[i].time <= T.preprocessing(); });
      check("deadline", ok2);
    }
    o.completion = latest(r.out, honest, [](auto& x) { return x.time; });
    o.result["cs"] = set_json(r.out[h0].cs);
    o.result["triples"] = s.count;
  } else if (p == "cireval") {
    const Circuit& c = *s.circuit;
    const auto x = to_field(f, s.inputs);
    auto r = run_cireval(ctx, c, x, opt);
    finish(r);
    check("termination", all_have(r.out, [](auto& o2) { return o2.has; }));
    const PartyId h0 = honest.first();
    bool same = true;
    honest.for_each([&](PartyId i) { same = same && (!r.out[i].has || (r.out[i].y == r.out[h0].y && r.out[i].cs == r.out[h0].cs)); });
    check("unanimity", same);
    // Honest parties contribute their own inputs; corrupt members of CS whatever they committed to.
    std::vector<Fe> masked = x;
    bool committed = true;
    for (PartyId j = 0; j < n; ++j) {
      if (!r.out[h0].cs.contains(j)) {
        masked[j] = 0;
      } else if (s.corrupt.contains(j)) {
        std::vector<const ShareBlock*> views(n, nullptr);
        honest.for_each([&](PartyId i) {
          if (r.out[i].has && r.out[i].inputs[j].L() > 0) views[i] = &r.out[i].inputs[j];
        });
        const Assembled a = assemble(ctx, honest, views);
        committed = committed && a.consistent && a.complete && a.values.size() == 1;
        if (!a.values.empty()) masked[j] = a.values[0];
      }
    }
    check("input-commitment", committed);
    const Fe expect = c.evaluate(f, masked);
    bool ok = true;
    honest.for_each([&](PartyId i) { ok = ok && r.out[i].has && r.out[i].y == expect; });
    check("oracle", ok);
    if (sync) {
      check("cs-honest", honest.subset_of(r.out[h0].cs));
      bool ok2 = true;
      honest.for_each([&](PartyId i) { ok2 = ok2 && r.out[i].has && r.out[i].time <= T.cireval_bound(c.mul_depth()); });
      check("deadline", ok2);
    }
    o.completion = latest(r.out, honest, [](auto& o2) { return o2.time; });
    o.result["y"] = r.out[h0].y;
    o.result["cs"] = set_json(r.out[h0].cs);
    o.result["completion_ticks"] = o.completion;
    o.result["message_count"] = r.stats.envelopes;
    o.result["bit_count"] = r.stats.bytes * 8;
  }
  return o;
}

Json run_suite(const Scenario& s, const std::vector<std::uint64_t>& seeds, const SuiteOptions& opt) {
  std::vector<std::uint64_t> order = seeds;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  Json runs = Json::array();
  std::map<std::string, std::pair<int, int>> verdicts;
  std::map<Tick, int> histogram;
  std::map<std::string, std::uint64_t> env_by_family, bits_by_family;
  bool ok = true;
  for (std::uint64_t seed : order) {
    SeedOutcome out = run_seed(s, seed, !opt.trace_dir.empty());
    if (!opt.trace_dir.empty()) {
      std::filesystem::create_directories(opt.trace_dir);
      std::ofstream tf(std::filesystem::path(opt.trace_dir) / (s.protocol + "-seed" + std::to_string(seed) + ".jsonl"));
      tf << sim::trace_to_jsonl(out.trace);
    }
    for (const auto& [name, pass] : out.invariants) {
      auto& v = verdicts[name];
      (pass ? v.first : v.second) += 1;
    }
    histogram[out.completion] += 1;
    for (const auto& [fam, c] : out.stats.envelopes_by_family) env_by_family[fam] += c;
    for (const auto& [fam, c] : out.stats.bytes_by_family) bits_by_family[fam] += 8 * c;
    ok = ok && out.ok();
    runs.push_back(out.to_json());
  }

  Json agg;
  agg["runs"] = order.size();
  Json hist = Json::object();
  for (const auto& [t, c] : histogram) hist[std::to_string(t)] = c;
  agg["completion_histogram"] = hist;
  agg["envelopes_by_family"] = env_by_family;
  agg["bits_by_family"] = bits_by_family;
  Json inv = Json::object();
  for (const auto& [name, v] : verdicts) inv[name] = {{"pass", v.first}, {"fail", v.second}};
  agg["invariants"] = inv;

  Json report;
  report["scenario"] = s.to_json();
  report["runs"] = runs;
  report["aggregate"] = agg;
  report["ok"] = ok;
  return report;
}

bool report_ok(const Json& report) { return report.value("ok", false); }

Json Divergence::to_json() const {
  Json j;
  j["identical"] = identical;
  if (!identical) {
    j["index"] = index;
    j["a"] = a;
    j["b"] = b;
  }
  return j;
}

Divergence diff_traces(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  Divergence d;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& x = i < a.size() ? a[i] : std::string();
    const std::string& y = i < b.size() ? b[i] : std::string();
    if (i >= a.size() || i >= b.size() || x != y) {
      d.identical = false;
      d.index = i;
      d.a = x;
      d.b = y;
      break;
    }
  }
  return d;
}

Divergence diff_traces(const std::vector<sim::TraceEvent>& a, const std::vector<sim::TraceEvent>& b) {
  auto lines = [](const std::vector<sim::TraceEvent>& t) {
    std::vector<std::string> out;
    std::istringstream in(sim::trace_to_jsonl(t));
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  };
  return diff_traces(lines(a), lines(b));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace bobw
