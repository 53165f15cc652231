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

#include "bobw/sim/strategy.hpp"

#include <stdexcept>

namespace bobw::sim {

StrategySpec StrategySpec::parse(const std::string& name) {
  StrategySpec s;
  std::string base = name, arg;
  if (auto at = name.find('@'); at != std::string::npos) {
    base = name.substr(0, at);
    arg = name.substr(at + 1);
  }
  if (base == "honest") s.kind = StrategyKind::kHonest;
  else if (base == "crash" || base == "crash-silent") s.kind = StrategyKind::kCrash;
  else if (base == "equivocate") s.kind = StrategyKind::kEquivocate;
  else if (base == "wrong-value") s.kind = StrategyKind::kWrongValue;
  else if (base == "delay-max") s.kind = StrategyKind::kDelayMax;
  else if (base == "wrong-share") s.kind = StrategyKind::kWrongShare;
  else if (base == "bad-dealer") s.kind = StrategyKind::kBadDealer;
  else if (base == "wrong-summand") s.kind = StrategyKind::kWrongSummand;
  else if (base == "biased-input") s.kind = StrategyKind::kBiasedInput;
  else throw std::invalid_argument("unknown strategy '" + name + "'");
  if (!arg.empty()) {
    if (s.kind == StrategyKind::kCrash) s.crash_at = std::stoll(arg);
    else if (s.kind == StrategyKind::kBadDealer) {
      // "M" or "M:v1,v2": share index M and victim parties, all 1-based.
      const auto colon = arg.find(':');
      if (colon != 0) s.target_set = std::stoi(arg.substr(0, colon)) - 1;
      if (colon != std::string::npos) {
        std::string rest = arg.substr(colon + 1);
        for (std::size_t pos = 0; pos < rest.size();) {
          const auto comma = rest.find(',', pos);
          s.victims.insert(std::stoi(rest.substr(pos, comma - pos)) - 1);
          pos = comma == std::string::npos ? rest.size() : comma + 1;
        }
      }
    }
    else if (s.kind == StrategyKind::kBiasedInput) s.fixed_input = std::stoull(arg);
    else s.offset = std::stoull(arg);
  }
  return s;
}

std::string StrategySpec::name() const {
  switch (kind) {
    case StrategyKind::kHonest: return "honest";
    case StrategyKind::kCrash: return crash_at ? "crash@" + std::to_string(crash_at) : "crash";
    case StrategyKind::kEquivocate: return "equivocate";
    case StrategyKind::kWrongValue: return "wrong-value";
    case StrategyKind::kDelayMax: return "delay-max";
    case StrategyKind::kWrongShare: return "wrong-share";
    case StrategyKind::kBadDealer: {
      std::string out = "bad-dealer";
      if (target_set < 0 && victims.empty()) return out;
      out += "@" + (target_set >= 0 ? std::to_string(target_set + 1) : std::string());
      if (!victims.empty()) {
        out += ":";
        std::string sep;
        victims.for_each([&](PartyId p) { out += sep + std::to_string(p + 1); sep = ","; });
      }
      return out;
    }
    case StrategyKind::kWrongSummand: return "wrong-summand";
    case StrategyKind::kBiasedInput: return "biased-input@" + std::to_string(fixed_input);
  }
  return "?";
}

Strategy::Strategy(StrategySpec spec, int n, PrimeField field) : spec_(spec), field_(field) {
  if (spec_.victims.empty())
    for (PartyId i = 1; i < n; i += 2) spec_.victims.insert(i);
}

namespace {

ValuePtr alter_value(const ValuePtr& v) {
  if (!v || v->empty()) return make_value(Blob{1});
  Blob b = *v;
  b[0] ^= 1U;
  return make_value(std::move(b));
}

bool carries_value(MsgKind k) {
  switch (k) {
    case MsgKind::kAcastInit:
    case MsgKind::kAcastEcho:
    case MsgKind::kAcastReady:
    case MsgKind::kSbaPref:
    case MsgKind::kSbaPropose:
    case MsgKind::kSbaKing:
    case MsgKind::kAbaEst:
    case MsgKind::kAbaAux:
    case MsgKind::kAbaTerm:
    case MsgKind::kReady: return true;
    default: return false;
  }
}

}  // namespace

MessagePtr Strategy::transform(PartyId to, Tick now, const MessagePtr& m) const {
  switch (spec_.kind) {
    case StrategyKind::kHonest:
    case StrategyKind::kDelayMax:
    case StrategyKind::kBiasedInput: return m;
    case StrategyKind::kCrash: return now >= spec_.crash_at ? nullptr : m;
    case StrategyKind::kEquivocate:
    case StrategyKind::kWrongValue: {
      if (!carries_value(m->kind)) return m;
      if (spec_.kind == StrategyKind::kEquivocate && !victim(to)) return m;
      auto c = std::make_shared<Message>(*m);
      switch (m->kind) {
        case MsgKind::kAbaEst:
        case MsgKind::kAbaAux:
        case MsgKind::kAbaTerm: c->ints.back() ^= 1; break;
        case MsgKind::kReady: c->elems[0] = field_.add(c->elems[0], spec_.offset); break;
        default: c->value = alter_value(m->value); break;
      }
      return c;
    }
    case StrategyKind::kWrongShare: {
      if (m->kind != MsgKind::kRecShare && m->kind != MsgKind::kVssPcheck) return m;
      auto c = std::make_shared<Message>(*m);
      const Fe shift = field_.mul(spec_.offset, static_cast<Fe>(to + 1));
      for (Fe& e : c->elems) e = field_.add(e, shift);
      return c;
    }
    case StrategyKind::kBadDealer: {
      if (m->kind != MsgKind::kVssShare || !victim(to)) return m;
      if (spec_.target_set >= 0 && m->ints[0] != spec_.target_set) return m;
      auto c = std::make_shared<Message>(*m);
      for (Fe& e : c->elems) e = field_.add(e, spec_.offset);
      return c;
    }
    case StrategyKind::kWrongSummand: {
      if (m->kind != MsgKind::kVssShare || m->ints[0] != 0) return m;
      auto c = std::make_shared<Message>(*m);
      for (Fe& e : c->elems) e = field_.add(e, spec_.offset);
      return c;
    }
  }
  return m;
}

}  // namespace bobw::sim
