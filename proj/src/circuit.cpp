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

#include "bobw/circuit.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bobw {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("circuit line " + std::to_string(line) + ": " + what);
}

}  // namespace

Circuit Circuit::parse(const std::string& text, int n) {
  Circuit c;
  std::map<std::string, int> wire;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto operand = [&](const std::string& name) {
    auto it = wire.find(name);
    if (it == wire.end()) fail(lineno, "unknown wire '" + name + "'");
    return it->second;
  };
  auto number = [&](const std::string& tok) {
    try {
      std::size_t pos = 0;
      std::int64_t v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      fail(lineno, "bad constant '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "OUTPUT") {
      if (tok.size() != 2) fail(lineno, "OUTPUT takes one wire");
      if (c.output_ >= 0) fail(lineno, "only one OUTPUT is supported");
      c.output_ = operand(tok[1]);
      continue;
    }
    if (tok.size() < 3 || tok[1] != "=") fail(lineno, "expected `wire = OP ...`");
    if (wire.contains(tok[0])) fail(lineno, "wire '" + tok[0] + "' assigned twice");
    Gate g;
    const std::string& op = tok[2];
    auto arity = [&](std::size_t k) {
      if (tok.size() != 3 + k) fail(lineno, op + " takes " + std::to_string(k) + " operands");
    };
    if (op == "ADD" || op == "MUL") {
      arity(2);
      g.op = op == "ADD" ? Gate::Op::kAdd : Gate::Op::kMul;
      g.a = operand(tok[3]);
      g.b = operand(tok[4]);
    } else if (op == "CMUL" || op == "CADD") {
      arity(2);
      g.op = op == "CMUL" ? Gate::Op::kCMul : Gate::Op::kCAdd;
      g.c = number(tok[3]);
      g.a = operand(tok[4]);
    } else if (op == "INPUT") {
      arity(1);
      g.op = Gate::Op::kInput;
      g.party = static_cast<PartyId>(number(tok[3])) - 1;
      if (g.party < 0 || g.party >= n) fail(lineno, "input party out of range");
    } else if (op == "CONST") {
      arity(1);
      g.op = Gate::Op::kConst;
      g.c = number(tok[3]);
    } else {
      fail(lineno, "unknown gate '" + op + "'");
    }
    const int da = g.a >= 0 ? c.gates_[g.a].depth : 0;
    const int db = g.b >= 0 ? c.gates_[g.b].depth : 0;
    g.depth = std::max(da, db);
    if (g.op == Gate::Op::kMul) {
      g.depth += 1;
      g.mul_index = c.mul_count_++;
      g.level = g.depth - 1;
      c.mul_depth_ = std::max(c.mul_depth_, g.depth);
    }
    wire[tok[0]] = static_cast<int>(c.gates_.size());
    c.names_.push_back(tok[0]);
    c.gates_.push_back(g);
  }
  if (c.output_ < 0) throw std::invalid_argument("circuit has no OUTPUT");
  c.levels_.assign(static_cast<std::size_t>(c.mul_depth_), {});
  for (int i = 0; i < static_cast<int>(c.gates_.size()); ++i)
    if (c.gates_[i].op == Gate::Op::kMul) c.levels_[static_cast<std::size_t>(c.gates_[i].level)].push_back(i);
  return c;
}

Circuit Circuit::load(const std::string& path, int n) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open circuit file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), n);
}

Fe Circuit::evaluate(const PrimeField& f, const std::vector<Fe>& inputs) const {
  std::vector<Fe> w(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.op) {
      case Gate::Op::kInput: w[i] = inputs.at(static_cast<std::size_t>(g.party)); break;
      case Gate::Op::kConst: w[i] = f.from_int(g.c); break;
      case Gate::Op::kAdd: w[i] = f.add(w[g.a], w[g.b]); break;
      case Gate::Op::kCMul: w[i] = f.mul(f.from_int(g.c), w[g.a]); break;
      case Gate::Op::kCAdd: w[i] = f.add(f.from_int(g.c), w[g.a]); break;
      case Gate::Op::kMul: w[i] = f.mul(w[g.a], w[g.b]); break;
    }
  }
  return w[static_cast<std::size_t>(output_)];
}

}  // namespace bobw
