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

// Scenario driver: check, run, suite, diff.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bobw/scenario.hpp"

using namespace bobw;

namespace {

// Trace files go here when the variable is set.
const char* kTraceEnv = "BOBW_TRACE_DIR";

std::string trace_dir() {
  const char* d = std::getenv(kTraceEnv);
  return d ? d : "";
}

void print_outcome(const SeedOutcome& o) {
  std::cout << "seed " << o.seed << ": " << (o.ok() ? "ok" : "FAIL") << "  completion=" << o.completion
            << "  envelopes=" << o.stats.envelopes << "  result=" << o.result.dump() << "\n";
  for (const auto& [name, pass] : o.invariants) std::cout << "  " << (pass ? "pass " : "FAIL ") << name << "\n";
}

std::vector<std::uint64_t> pick_seeds(const Scenario& s, const std::vector<std::uint64_t>& given, std::int64_t first,
                                      std::int64_t count) {
  if (!given.empty()) return given;
  if (count > 0) {
    std::vector<std::uint64_t> out;
    for (std::int64_t k = 0; k < count; ++k) out.push_back(static_cast<std::uint64_t>(first + k));
    return out;
  }
  return s.seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bobw: best-of-both-worlds MPC protocol simulator"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON on stdout");

  std::string config;
  std::vector<std::uint64_t> seeds;
  std::int64_t first = 0, count = 0;
  std::uint64_t seed = 0;
  std::string out_path;

  auto* check = app.add_subcommand("check", "Validate a scenario");
  check->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);

  auto* run = app.add_subcommand("run", "Run one seed");
  run->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  auto* seed_opt = run->add_option("--seed", seed, "Seed (default: first seed of the scenario)");

  auto* suite = app.add_subcommand("suite", "Run a seed range and report");
  suite->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  suite->add_option("--seeds", seeds, "Explicit seeds");
  suite->add_option("--first", first, "First seed of a range");
  suite->add_option("--count", count, "Number of seeds in the range");
  suite->add_option("-o,--out", out_path, "Also write the JSON report here");

  std::vector<std::string> files;
  std::uint64_t seed_a = 0, seed_b = 1;
  auto* diff = app.add_subcommand("diff", "First divergence of two traces");
  diff->add_option("traces", files, "Two JSONL trace files")->expected(0, 2);
  diff->add_option("--config", config, "Scenario JSON; compares two seeds instead of files");
  diff->add_option("--seed-a", seed_a, "First seed");
  diff->add_option("--seed-b", seed_b, "Second seed");

  for (auto* sc : {check, run, suite, diff}) sc->add_flag("--json", json, "Print the report as JSON on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const Scenario s = Scenario::load(config);
      const Validation v = validate(s);
      if (json) {
        std::cout << v.to_json().dump(2) << "\n";
      } else {
        std::cout << (v.ok ? "ok" : "invalid") << "\n";
        for (const auto& e : v.errors) std::cout << "  " << e << "\n";
      }
      return v.ok ? 0 : 1;
    }

    if (*run || *suite) {
      const Scenario s = Scenario::load(config);
      const Validation v = validate(s);
      if (!v.ok) {
        std::cerr << "invalid scenario:\n";
        for (const auto& e : v.errors) std::cerr << "  " << e << "\n";
        return 2;
      }
      if (*run) {
        const std::uint64_t sd = seed_opt->count() ? seed : s.seeds.front();
        const std::string dir = trace_dir();
        SeedOutcome o = run_seed(s, sd, !dir.empty());
        if (!dir.empty()) {
          std::ofstream(dir + "/" + s.protocol + "-seed" + std::to_string(sd) + ".jsonl") << sim::trace_to_jsonl(o.trace);
        }
        if (json) std::cout << o.to_json().dump(2) << "\n";
        else print_outcome(o);
        return o.ok() ? 0 : 1;
      }
      const Json report = run_suite(s, pick_seeds(s, seeds, first, count), SuiteOptions{trace_dir()});
      if (!out_path.empty()) std::ofstream(out_path) << report.dump(2) << "\n";
      if (json) {
        std::cout << report.dump(2) << "\n";
      } else {
        const Json& agg = report["aggregate"];
        std::cout << s.protocol << ": " << agg["runs"] << " runs, " << (report_ok(report) ? "all invariants hold" : "FAILURES")
                  << "\n";
        for (const auto& [name, v] : agg["invariants"].items())
          std::cout << "  " << name << ": " << v["pass"] << " pass, " << v["fail"] << " fail\n";
      }
      return report_ok(report) ? 0 : 1;
    }

    if (*diff) {
      Divergence d;
      if (!config.empty()) {
        const Scenario s = Scenario::load(config);
        d = diff_traces(run_seed(s, seed_a, true).trace, run_seed(s, seed_b, true).trace);
      } else {
        if (files.size() != 2) throw std::invalid_argument("diff needs two trace files or --config");
        d = diff_traces(read_lines(files[0]), read_lines(files[1]));
      }
      if (json) {
        std::cout << d.to_json().dump(2) << "\n";
      } else if (d.identical) {
        std::cout << "identical\n";
      } else {
        std::cout << "first divergence at event " << d.index << "\n  a: " << d.a << "\n  b: " << d.b << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
