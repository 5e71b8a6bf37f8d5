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

#include "qpc/protocol_ghz.hpp"

#include <stdexcept>

#include "qpc/channel.hpp"

namespace qpc {

BitString ghz_encrypt_combine(const BitString& x, const BitString& key_a, const BitString& y,
                              const BitString& key_b) {
    return x ^ key_a ^ y ^ key_b;
}

SessionResult ghz_tp_verdict(QubitStore& store, const BitString& cipher,
                             const std::vector<QubitId>& retained, Rng& rng,
                             BitString* outcomes) {
    if (cipher.len != retained.size()) {
        throw std::invalid_argument("cipher length must match retained sequence");
    }
    for (uint32_t i = 0; i < cipher.len; ++i) {
        if (cipher.bit(i)) store.apply_pauli(retained[i], PauliOp::Z);
    }
    const BitString t = measure_sequence_x(store, retained, rng);
    if (outcomes != nullptr) *outcomes = t;
    return t.all_zero() ? SessionResult::Equal : SessionResult::NotEqual;
}

Transcript run_ghz_session(const ComparisonInput& input, const SessionConfig& config,
                           uint64_t trial) {
    SessionContext ctx(Protocol::Ghz, input, config, trial);
    const uint32_t n = input.n_bits;

    // TP prepares one GHZ triplet per bit: particle 1 to Alice, 2 to Bob,
    // 3 retained.
    std::vector<QubitId> to_alice, to_bob, retained;
    for (uint32_t i = 0; i < n; ++i) {
        const std::vector<QubitId> ids = ctx.store().add_state(prepare_ghz3());
        to_alice.push_back(ids[0]);
        to_bob.push_back(ids[1]);
        retained.push_back(ids[2]);
    }

    const GuardedDelivery da = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Alice), to_alice);
    const GuardedDelivery db = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Bob), to_bob);
    if (!da.report.passed || !db.report.passed) {
        return ctx.finish(SessionResult::Aborted);
    }

    const BitString key_a = measure_sequence_x(ctx.store(), da.payload, ctx.rng("alice"));
    ctx.add_event(MeasurementEvent{Party::Alice, "K_A", "X-basis key", key_a});
    const BitString key_b = measure_sequence_x(ctx.store(), db.payload, ctx.rng("bob"));
    ctx.add_event(MeasurementEvent{Party::Bob, "K_B", "X-basis key", key_b});

    const BitString xa = BitString::of(input.x, n);
    const BitString yb = BitString::of(input.y, n);
    const BitString cipher_a = xa ^ key_a;
    ctx.add_event(ClassicalMessageEvent{Party::Alice, Party::Bob, "C_A", "", cipher_a, {}});
    const BitString cipher = ghz_encrypt_combine(xa, key_a, yb, key_b);
    ctx.add_event(ClassicalMessageEvent{Party::Bob, Party::TP, "C", "C_A xor C_B", cipher, {}});

    BitString tp_outcomes;
    const SessionResult verdict =
        ghz_tp_verdict(ctx.store(), cipher, retained, ctx.rng("tp"), &tp_outcomes);
    ctx.add_event(MeasurementEvent{Party::TP, "tp_outcome",
                                   "X outcomes after sigma_z corrections", tp_outcomes});
    return ctx.finish(verdict);
}

std::vector<GhzRound> ghz_rounds(const Transcript& t) {
    const auto key_a = t.named_bits("K_A");
    const auto key_b = t.named_bits("K_B");
    const auto cipher = t.named_bits("C");
    const auto outcome = t.named_bits("tp_outcome");
    if (!key_a || !key_b || !cipher || !outcome) {
        throw std::invalid_argument("transcript is not a completed ghz session");
    }
    std::vector<GhzRound> rounds;
    for (uint32_t i = 0; i < t.n_bits; ++i) {
        rounds.push_back(
            GhzRound{i, key_a->bit(i), key_b->bit(i), cipher->bit(i), outcome->bit(i)});
    }
    return rounds;
}

}  // namespace qpc
