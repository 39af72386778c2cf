// Copyright 2026 The CVQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVQC_COMMON_H_
#define CVQC_COMMON_H_

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvqc {

// One bit per element, values restricted to {0, 1}.
using Bits = std::vector<std::uint8_t>;
using Bytes = std::vector<std::uint8_t>;

// Packed domain elements and images. Every toy family keeps both within 64
// bits, so a single word is enough.
using Word = std::uint64_t;

// All randomness flows through an explicit engine.
using Rng = std::mt19937_64;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a requested size exceeds the exact-simulation limits.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int Parity(Word v) { return std::popcount(v) & 1; }

// Inner product over GF(2) of the bit encodings.
inline int DotGf2(Word a, Word b) { return Parity(a & b); }

inline Word LowMask(int bits) {
  return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1);
}

// SplitMix64 finalizer; used to derive independent seeds.
inline std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(Mix64(seed) ^ Mix64(index + 0x632be59bd9b4e019ULL));
}

inline std::uint8_t RandomBit(Rng& rng) {
  return static_cast<std::uint8_t>(rng() >> 63);
}

inline Bits RandomBits(std::size_t count, Rng& rng) {
  Bits out(count);
  for (auto& b : out) b = RandomBit(rng);
  return out;
}

// Uniform integer in [0, bound) by rejection; portable across standard
// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cvqc

#endif  // CVQC_COMMON_H_
