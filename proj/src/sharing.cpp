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

#include "bobw/sharing.hpp"

#include <stdexcept>

namespace bobw {

std::vector<std::pair<int, Fe>> SecretSharing::view(const SharingSpec& spec, PartyId i) const {
  std::vector<std::pair<int, Fe>> out;
  for (int m : spec.held_by(i)) out.emplace_back(m, shares[m]);
  return out;
}

SecretSharing share(Fe s, const SharingSpec& spec, const PrimeField& f, std::mt19937_64& rng) {
  SecretSharing sh;
  sh.shares.resize(spec.q());
  Fe acc = 0;
  for (int m = 1; m < spec.q(); ++m) {
    sh.shares[m] = f.random(rng);
    acc = f.add(acc, sh.shares[m]);
  }
  sh.shares[0] = f.sub(s, acc);
  return sh;
}

SecretSharing default_sharing(Fe s, const SharingSpec& spec) {
  SecretSharing sh;
  sh.shares.assign(spec.q(), 0);
  sh.shares[0] = s;
  return sh;
}

SecretSharing lin_combine(const PrimeField& f, Fe c1, const SecretSharing& a, Fe c2, const SecretSharing& b) {
  if (a.shares.size() != b.shares.size()) throw std::invalid_argument("sharing spec mismatch");
  SecretSharing r;
  r.shares.resize(a.shares.size());
  for (std::size_t m = 0; m < a.shares.size(); ++m)
    r.shares[m] = f.add(f.mul(c1, a.shares[m]), f.mul(c2, b.shares[m]));
  return r;
}

Fe reconstruct(const PrimeField& f, const SecretSharing& sh) {
  Fe acc = 0;
  for (Fe x : sh.shares) acc = f.add(acc, x);
  return acc;
}

ShareBlock ShareBlock::column(int l) const {
  ShareBlock b(q_, 1);
  for (int m = 0; m < q_; ++m) b.at(m, 0) = at(m, l);
  return b;
}

ShareBlock ShareBlock::concat(const std::vector<const ShareBlock*>& parts) {
  int L = 0, q = 0;
  for (const ShareBlock* p : parts) { L += p->L(); q = p->q(); }
  ShareBlock b(q, L);
  int off = 0;
  for (const ShareBlock* p : parts) {
    for (int m = 0; m < q; ++m)
      for (int l = 0; l < p->L(); ++l) b.at(m, off + l) = p->at(m, l);
    off += p->L();
  }
  return b;
}

void ShareBlock::axpy(const PrimeField& f, Fe c, const ShareBlock& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f.add(data_[i], f.mul(c, other.data_[i]));
}

void ShareBlock::add_constant(const PrimeField& f, int l, Fe c, bool holds_first) {
  if (holds_first) at(0, l) = f.add(at(0, l), c);
}

}  // namespace bobw
