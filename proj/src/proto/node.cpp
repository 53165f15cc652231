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

#include "bobw/proto/node.hpp"

namespace bobw::proto {

Runtime::Runtime(const Context& ctx, sim::Simulator& sim, PartyId self)
    : ctx_(ctx), sim_(sim), self_(self), rng_(sim.seed() * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(self) + 1) {
  sim_.set_receiver(self_, [this](const sim::Envelope& e) {
    if (root_) root_->receive(e.from, *e.msg);
  });
}

Runtime::~Runtime() { sim_.set_receiver(self_, nullptr); }

void Runtime::set_root(std::unique_ptr<Node> root) { root_ = std::move(root); }

std::uint64_t route_tag(const Route& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t k : r) {
    std::uint64_t w = k;
    h = sim::hash_words(h, &w, 1);
  }
  return h;
}

}  // namespace bobw::proto
