// Copyright 2026 The pfcond authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "pfcond/ring.hpp"

namespace pfcond {

/// Deterministic seeded randomness. Sampling goes through the raw mt19937_64
/// stream (which the standard pins down exactly), so the same seed gives the
/// same values on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  int uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(next() %
                                 (static_cast<std::uint64_t>(hi) - lo + 1));
  }

  /// Uniform nonzero value in [lo, hi] (redraws zeros).
  int nonzero(int lo, int hi) {
    if (lo == 0 && hi == 0) throw std::invalid_argument("no nonzero value");
    int x;
    do {
      x = uniform(lo, hi);
    } while (x == 0);
    return x;
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Per-trial sub-seed derived from a suite seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pfcond
