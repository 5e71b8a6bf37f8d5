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

#ifndef QPC_PROTOCOL_SWAP_HPP
#define QPC_PROTOCOL_SWAP_HPP

#include <vector>

#include "qpc/session.hpp"
#include "qpc/transcript.hpp"

namespace qpc {

// Entanglement-swapping comparison over |phi+> pairs, two bits per round.
// Each player and TP keep one half of their own pairs and exchange the
// other halves (guarded by EPR check pairs); Bell-measuring the mixed pairs
// swaps the entanglement so the player's code and TP's code on the partner
// pair agree exactly. Everything that carries comparison bits crosses a
// channel once.
//
// The two exchanges are logically independent; the order is a simulation
// detail and must not change any protocol value.
enum class SwapOrder { AliceFirst, BobFirst };

Transcript run_swap_session(const ComparisonInput& input, const SessionConfig& config,
                            uint64_t trial = 0, SwapOrder order = SwapOrder::AliceFirst);

/// ceil(n_bits / 2) two-bit rounds; odd widths are zero-padded at the top.
uint32_t swap_chunk_count(uint32_t n_bits);

/// Chunk j of a value as a 2-bit code: high bit 2j+1, low bit 2j.
uint8_t swap_chunk(uint64_t value, uint32_t j);

// Bell-measures (retained, received); the partner qubits collapse to the
// same Bell state, which is what makes TP's follow-up code identical.
uint8_t swap_measure(QubitStore& store, QubitId retained, QubitId received, Rng& rng);

struct SwapRound {
    uint32_t chunk_index;
    uint8_t x_chunk, y_chunk;  // 2-bit input chunks (after padding)
    uint8_t r_a, r_b;          // players' Bell codes
    uint8_t r_c;               // TP's combined code (alice-side ^ bob-side)
    uint8_t r;                 // (r_a ^ x_chunk) ^ (r_b ^ y_chunk)
};

/// R = sum over rounds of popcount(r ^ r_c); Equal iff R == 0.
std::pair<SessionResult, uint64_t> swap_combine_and_verdict(const std::vector<SwapRound>& rounds);

std::vector<SwapRound> swap_rounds(const Transcript& t);

}  // namespace qpc

#endif
