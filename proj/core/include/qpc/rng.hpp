// Copyright 2026 The qpcsim Authors
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

#ifndef QPC_RNG_HPP
#define QPC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace qpc {

/// SplitMix64 finalizer. Used for seed derivation only, never for sampling.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent child seed from a root seed and a stream index.
constexpr uint64_t derive_seed(uint64_t root, uint64_t index) {
    return splitmix64(splitmix64(root) ^ splitmix64(index + 0x51ed270b0a1c2ULL));
}

/// FNV-1a hash of a stream tag, for named substreams.
constexpr uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic random source. mt19937_64 is fully specified by the standard
// and the uniform mappings below avoid std::*_distribution (whose output is
// implementation-defined), so identical seeds give identical draws on every
// platform. Not thread safe; each session/worker owns its own instance.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    /// Uniform integer in [0, n), unbiased (rejection sampling). n must be > 0.
    uint64_t next_below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qpc

#endif
