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

#ifndef QPC_PROTOCOL_GHZ_HPP
#define QPC_PROTOCOL_GHZ_HPP

#include <vector>

#include "qpc/session.hpp"
#include "qpc/transcript.hpp"

namespace qpc {

// GHZ-triplet comparison. TP distributes one GHZ triplet per bit; Alice and
// Bob turn their X-basis outcomes into one-time keys, publish the combined
// ciphertext C = x ^ K_A ^ y ^ K_B, and TP flips his qubit with sigma_z
// wherever C has a 1 before X-measuring. Every |-> he then sees marks a bit
// where x and y differ.
Transcript run_ghz_session(const ComparisonInput& input, const SessionConfig& config,
                           uint64_t trial = 0);

/// C = x ^ key_a ^ y ^ key_b, bitwise; throws on length mismatch.
BitString ghz_encrypt_combine(const BitString& x, const BitString& key_a, const BitString& y,
                              const BitString& key_b);

// Applies sigma_z to retained qubit i iff cipher bit i is set, X-measures
// everything, and reports NotEqual iff any outcome is |->. The outcome
// vector (which equals x ^ y) lands in *outcomes when non-null.
SessionResult ghz_tp_verdict(QubitStore& store, const BitString& cipher,
                             const std::vector<QubitId>& retained, Rng& rng,
                             BitString* outcomes = nullptr);

/// Per-bit view of a completed ghz transcript, for tests and analysis.
struct GhzRound {
    uint32_t index;
    int key_a;
    int key_b;
    int cipher;
    int tp_outcome;
};

std::vector<GhzRound> ghz_rounds(const Transcript& t);

}  // namespace qpc

#endif
