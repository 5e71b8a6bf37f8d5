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

#ifndef QPC_PROTOCOL_CHI_HPP
#define QPC_PROTOCOL_CHI_HPP

#include <vector>

#include "qpc/session.hpp"
#include "qpc/transcript.hpp"

namespace qpc {

// Superdense-coding comparison over chi-type states. TP hands particle 1 of
// each chi state to Alice and particle 2 to Bob, who encode their secret
// bits with sigma_x (bit 1) or identity (bit 0) and read out in Z. Because
// the chi state ties the Z parity of particles (1,2) to whether (3,4) carry
// a phi- or psi-type Bell state, R ^ R_t reproduces x ^ y exactly.
Transcript run_chi_session(const ComparisonInput& input, const SessionConfig& config,
                           uint64_t trial = 0);

/// sigma_x^secret, then Z-measure; consumes the qubit.
int chi_encode_and_measure(QubitStore& store, QubitId q, int secret_bit, Rng& rng);

// Bell-measures each retained (3,4) pair; R_t bit i is 0 for phi-type and 1
// for psi-type. Returns Equal iff R ^ R_t is all zeros. Raw Bell codes land
// in *codes (2 bits per pair) when non-null.
SessionResult chi_tp_verdict(QubitStore& store, const BitString& r,
                             const std::vector<std::pair<QubitId, QubitId>>& retained_pairs,
                             Rng& rng, BitString* r_t = nullptr, BitString* codes = nullptr);

struct ChiRound {
    uint32_t index;
    int r_a;
    int r_b;
    int r;    // r_a ^ r_b
    int r_t;  // 0 for phi-type, 1 for psi-type
};

std::vector<ChiRound> chi_rounds(const Transcript& t);

}  // namespace qpc

#endif
