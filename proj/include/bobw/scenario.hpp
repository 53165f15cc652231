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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bobw/circuit.hpp"
#include "bobw/runner.hpp"

namespace bobw {

using Json = nlohmann::json;

// One scenario file: structures, network, adversary, protocol under test and its inputs.
// Party indices are 1-based in the file and 0-based in memory.
struct Scenario {
  int n = 0;
  AdversaryStructure zs;
  AdversaryStructure za;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  sim::NetConfig net;
  PartySet corrupt;
  sim::StrategySpec strategy;
  std::string protocol;
  PartyId sender = 0;                 // acast, bc: sender; vss: dealer
  Tick sender_start = 0;              // bc: when the sender starts
  std::vector<std::int64_t> value;    // acast, bc: message words
  std::vector<std::int64_t> inputs;   // per party (sba, aba, ba, acs, cireval) or per value (rec, vss)
  std::vector<std::int64_t> x, y;     // beaver, mult: factors per value
  int count = 1;                      // preprocessing: number of triples
  std::string circuit_path;
  std::optional<Circuit> circuit;
  std::vector<std::uint64_t> seeds{0};
  bool ok_batching = true;
  std::vector<std::string> checks;    // empty: every applicable invariant

  // Throws std::invalid_argument with a readable reason.
  static Scenario from_json(const Json& j, const std::string& base_dir = ".");
  static Scenario load(const std::string& path);
  // Canonical echo of the configuration (sorted keys, 1-based indices).
  Json to_json() const;
  proto::Context context() const;
};

extern const std::vector<std::string> kProtocols;

struct Validation {
  bool ok = true;
  ConReport con;
  std::vector<std::string> errors;
  Json to_json() const;
};

// Structural checks plus the Con conditions where the protocol needs them.
Validation validate(const Scenario& s);

// Outcome of one seed: invariant verdicts and a protocol-specific summary.
struct SeedOutcome {
  std::uint64_t seed = 0;
  bool timed_out = false;
  Tick end = 0;
  Tick completion = -1;  // latest honest output time
  sim::NetStats stats;
  std::uint64_t trace_hash = 0;
  std::map<std::string, bool> invariants;
  Json result;
  std::vector<sim::TraceEvent> trace;

  bool ok() const;
  Json to_json() const;
};

SeedOutcome run_seed(const Scenario& s, std::uint64_t seed, bool keep_trace = false);

struct SuiteOptions {
  std::string trace_dir;  // empty: no trace files
};

// Report over all seeds, sorted by seed; deterministic for a fixed scenario.
Json run_suite(const Scenario& s, const std::vector<std::uint64_t>& seeds, const SuiteOptions& opt = {});
bool report_ok(const Json& report);

struct Divergence {
  bool identical = true;
  std::size_t index = 0;  // first differing event
  std::string a, b;       // the differing lines ("" past the end)
  Json to_json() const;
};

Divergence diff_traces(const std::vector<std::string>& a, const std::vector<std::string>& b);
Divergence diff_traces(const std::vector<sim::TraceEvent>& a, const std::vector<sim::TraceEvent>& b);
std::vector<std::string> read_lines(const std::string& path);

}  // namespace bobw
