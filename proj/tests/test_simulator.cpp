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

#include <gtest/gtest.h>

#include "bobw/sim/simulator.hpp"
#include "bobw/sim/strategy.hpp"
#include "support.hpp"

using namespace bobw;
using namespace bobw::sim;

namespace {

MessagePtr ping(std::int64_t k) {
  auto m = std::make_shared<Message>();
  m->kind = MsgKind::kPing;
  m->ints.push_back(k);
  return m;
}

// Every party pings everyone at start; receivers answer the first ping once.
struct Echo {
  std::vector<std::pair<Tick, Tick>> delays;  // (sent, delivered)
  std::vector<std::vector<PartyId>> order;    // per receiver, senders in delivery order
};

Echo run_pings(NetConfig cfg, std::uint64_t seed, std::uint64_t* hash = nullptr) {
  Simulator s(4, cfg, seed);
  s.enable_trace(true);
  Echo e;
  e.order.resize(4);
  for (PartyId p = 0; p < 4; ++p) {
    s.set_receiver(p, [&, p](const Envelope& env) {
      e.delays.emplace_back(env.sent, env.deliver);
      e.order[p].push_back(env.from);
      if (env.msg->ints[0] == 0) s.send(p, env.from, ping(1));
    });
    s.schedule(p, 0, 0, [&s, p] { s.send_all(p, ping(0)); });
  }
  EXPECT_TRUE(s.run());
  if (hash) *hash = s.trace_hash();
  return e;
}

}  // namespace

TEST(Simulator, SyncDeliversInExactlyDelta) {
  NetConfig cfg;
  cfg.delta = 3;
  const Echo e = run_pings(cfg, 1);
  ASSERT_EQ(e.delays.size(), 32u);
  for (auto [s, d] : e.delays) EXPECT_EQ(d - s, 3);
}

TEST(Simulator, AsyncDeterministicPerSeed) {
  NetConfig cfg;
  cfg.mode = NetworkMode::kAsync;
  cfg.sched = SchedulerStrategy::parse("uniform(1,4)");
  std::uint64_t h1 = 0, h2 = 0, h3 = 0;
  const Echo a = run_pings(cfg, 9, &h1);
  const Echo b = run_pings(cfg, 9, &h2);
  run_pings(cfg, 10, &h3);
  EXPECT_EQ(h1, h2);
  EXPECT_EQ(a.order, b.order);
  EXPECT_NE(h1, h3);
  for (auto [s, d] : a.delays) {
    EXPECT_GE(d - s, 1);
    EXPECT_LE(d - s, 4);
  }
}

TEST(Simulator, MaxDelayScheduler) {
  NetConfig cfg;
  cfg.mode = NetworkMode::kAsync;
  cfg.delta = 2;
  cfg.sched = SchedulerStrategy::parse("max-delay(3)");
  for (auto [s, d] : run_pings(cfg, 0).delays) EXPECT_EQ(d - s, 6);
}

TEST(Simulator, TimersFireDeeperFirst) {
  Simulator s(1, NetConfig{}, 0);
  std::vector<int> seen;
  s.schedule(0, 5, 0, [&] { seen.push_back(0); });
  s.schedule(0, 5, 2, [&] { seen.push_back(2); });
  s.schedule(0, 5, 1, [&] { seen.push_back(1); });
  s.schedule(0, 4, 0, [&] { seen.push_back(-1); });
  s.run();
  EXPECT_EQ(seen, (std::vector<int>{-1, 2, 1, 0}));
  EXPECT_EQ(s.now(), 5);
}

TEST(Simulator, BudgetStopsRun) {
  NetConfig cfg;
  cfg.budget = 10;
  Simulator s(1, cfg, 0);
  std::function<void()> loop = [&] { s.schedule(0, s.now() + 1, 0, loop); };
  s.schedule(0, 0, 0, loop);
  EXPECT_FALSE(s.run());
  EXPECT_TRUE(s.timed_out());
}

TEST(Simulator, CoinHiddenFromCorruptUntilHonestAsks) {
  Simulator s(2, NetConfig{}, 4);
  s.corrupt(1, std::make_shared<Strategy>(StrategySpec{}, 2, PrimeField()));
  EXPECT_FALSE(s.coin(1, 7, 0).has_value());
  const auto c = s.coin(0, 7, 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(s.coin(1, 7, 0), c);
  // Coins are balanced over many rounds.
  int ones = 0;
  for (int r = 0; r < 2000; ++r) ones += *s.coin(0, 11, r);
  EXPECT_NEAR(ones, 1000, 150);
}

TEST(Simulator, CrashedSenderIsSilent) {
  NetConfig cfg;
  Simulator s(2, cfg, 0);
  s.corrupt(0, std::make_shared<Strategy>(StrategySpec::parse("crash"), 2, PrimeField()));
  int got = 0;
  s.set_receiver(1, [&](const Envelope&) { ++got; });
  s.set_receiver(0, [](const Envelope&) {});
  s.schedule(0, 0, 0, [&] { s.send(0, 1, ping(0)); });
  s.run();
  EXPECT_EQ(got, 0);
}

TEST(Strategy, ParseRoundTrip) {
  for (const char* name : {"honest", "crash", "crash@12", "equivocate", "wrong-value", "delay-max", "wrong-share",
                           "bad-dealer", "bad-dealer@2", "bad-dealer@2:1,3", "wrong-summand", "biased-input@5"}) {
    EXPECT_EQ(StrategySpec::parse(name).name(), name) << name;
  }
  const auto bd = StrategySpec::parse("bad-dealer@2:1,3");
  EXPECT_EQ(bd.target_set, 1);
  EXPECT_EQ(bd.victims, bobw::testing::S({1, 3}));
  EXPECT_EQ(StrategySpec::parse("crash@7").crash_at, 7);
  EXPECT_THROW(StrategySpec::parse("sneaky"), std::invalid_argument);
}

TEST(Scheduler, ParseRoundTrip) {
  for (const char* name : {"eventual", "uniform(1,4)", "max-delay(3)", "targeted(4;1,2)"}) {
    EXPECT_EQ(SchedulerStrategy::parse(name).name(), name) << name;
  }
  const auto t = SchedulerStrategy::parse("targeted(4;1,2)");
  EXPECT_EQ(t.victim_delay, 4);
  EXPECT_EQ(t.victims, bobw::testing::S({1, 2}));
  EXPECT_THROW(SchedulerStrategy::parse("uniform(3"), std::invalid_argument);
}
