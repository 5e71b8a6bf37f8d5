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

#ifndef QPC_CHANNEL_HPP
#define QPC_CHANNEL_HPP

#include <string>
#include <utility>
#include <vector>

#include "qpc/session.hpp"
#include "qpc/store.hpp"
#include "qpc/transcript.hpp"

namespace qpc {

struct Channel {
    Party from;
    Party to;
    std::string name;  // "<from>-><to>"
};

Channel make_channel(Party from, Party to);

/// Channel names a protocol's quantum transfers use (for attack analytics).
std::vector<std::string> protocol_channels(Protocol p);

// BB84-style decoy qubits for the ghz/chi eavesdropping checks: uniformly
// one of {|0>, |1>, |+>, |->}, inserted at uniformly random positions, known
// only to the sender until the post-transfer announcement.
enum class DecoyState : uint8_t { Z0 = 0, Z1 = 1, Xplus = 2, Xminus = 3 };

char decoy_basis(DecoyState s);  // 'Z' or 'X'
int decoy_bit(DecoyState s);
StateVector decoy_state_vector(DecoyState s);

struct DecoyRecord {
    uint32_t position;  // index in the transmitted sequence
    DecoyState state;
    QubitId id;
};

/// EPR check pair for the swap protocol: `retained` stays with the sender,
/// `sent` travels inside the transmitted sequence at `position`.
struct EprCheckRecord {
    uint32_t position;
    QubitId retained;
    QubitId sent;
};

struct GuardedDelivery {
    std::vector<QubitId> payload;  // delivered payload handles, sender's order
    CheckReport report;
};

// Moves a sequence across a channel, applying the configured adversary to
// every qubit in transit. Handles survive delivery (intercept-resend rebinds
// them), and the transfer is recorded in the transcript. Interceptions go to
// the hidden adversary log only.
std::vector<QubitId> transmit_qubits(SessionContext& ctx, const Channel& channel,
                                     std::vector<QubitId> sequence);

/// Returns the augmented sequence and the sender's secret decoy record
/// (sorted by position). Draws from the channel's "decoys:" substream.
std::pair<std::vector<QubitId>, std::vector<DecoyRecord>> insert_decoys(
    SessionContext& ctx, const Channel& channel, const std::vector<QubitId>& payload);

// Post-delivery decoy verification: the sender announces positions and
// bases, the receiver measures each decoy in its announced basis, and the
// outcomes are compared to the preparation bits. Decoys are consumed.
// Throws std::logic_error on malformed records (protocol error).
CheckReport run_decoy_check(SessionContext& ctx, const Channel& channel,
                            const std::vector<DecoyRecord>& records, uint32_t sequence_len);

/// insert_decoys + transmit_qubits + run_decoy_check in one step.
GuardedDelivery send_with_decoy_check(SessionContext& ctx, const Channel& channel,
                                      const std::vector<QubitId>& payload);

/// Swap-protocol variant: |phi+> EPR check pairs ride along instead of
/// single-qubit decoys; verification Bell-measures each (retained, sent)
/// pair and counts any non-phi+ outcome as a mismatch.
GuardedDelivery send_with_epr_check(SessionContext& ctx, const Channel& channel,
                                    const std::vector<QubitId>& payload);

}  // namespace qpc

#endif
