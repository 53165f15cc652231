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
#include <random>
#include <stdexcept>

namespace bobw {

// Canonical representative in [0, p).
using Fe = std::uint64_t;

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("field prime out of range");
  }

  std::uint64_t modulus() const { return p_; }
  Fe add(Fe a, Fe b) const { Fe s = a + b; return s >= p_ ? s - p_ : s; }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + p_ - b; }
  Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
  Fe mul(Fe a, Fe b) const {
    return static_cast<Fe>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Fe from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Fe>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  bool valid(Fe a) const { return a < p_; }

  // Uniform element by rejection sampling.
  template <typename Rng>
  Fe random(Rng& rng) const {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % p_);
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % p_;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace bobw
