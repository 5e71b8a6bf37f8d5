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

#include "qpc/protocol_chi.hpp"

#include <stdexcept>

#include "qpc/channel.hpp"

namespace qpc {

int chi_encode_and_measure(QubitStore& store, QubitId q, int secret_bit, Rng& rng) {
    if (secret_bit) store.apply_pauli(q, PauliOp::X);
    return store.measure_z(q, rng);
}

SessionResult chi_tp_verdict(QubitStore& store, const BitString& r,
                             const std::vector<std::pair<QubitId, QubitId>>& retained_pairs,
                             Rng& rng, BitString* r_t, BitString* codes) {
    if (r.len != retained_pairs.size()) {
        throw std::invalid_argument("R length must match retained pair count");
    }
    BitString rt = BitString::zeros(r.len);
    BitString code_bits = BitString::zeros(2 * r.len);
    for (uint32_t i = 0; i < r.len; ++i) {
        const BellKind kind = store.measure_bell(retained_pairs[i].first,
                                                 retained_pairs[i].second, rng);
        rt.set_bit(i, is_phi(kind) ? 0 : 1);
        code_bits.set_bit(2 * i, bell_code(kind) & 1);
        code_bits.set_bit(2 * i + 1, (bell_code(kind) >> 1) & 1);
    }
    if (r_t != nullptr) *r_t = rt;
    if (codes != nullptr) *codes = code_bits;
    return (r ^ rt).all_zero() ? SessionResult::Equal : SessionResult::NotEqual;
}

Transcript run_chi_session(const ComparisonInput& input, const SessionConfig& config,
                           uint64_t trial) {
    SessionContext ctx(Protocol::Chi, input, config, trial);
    const uint32_t n = input.n_bits;

    // One chi state per bit: particle 1 to Alice, 2 to Bob, (3,4) retained.
    std::vector<QubitId> to_alice, to_bob;
    std::vector<std::pair<QubitId, QubitId>> retained;
    for (uint32_t i = 0; i < n; ++i) {
        const std::vector<QubitId> ids = ctx.store().add_state(prepare_chi00());
        to_alice.push_back(ids[0]);
        to_bob.push_back(ids[1]);
        retained.emplace_back(ids[2], ids[3]);
    }

    const GuardedDelivery da = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Alice), to_alice);
    const GuardedDelivery db = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Bob), to_bob);
    if (!da.report.passed || !db.report.passed) {
        return ctx.finish(SessionResult::Aborted);
    }

    Rng& alice_rng = ctx.rng("alice");
    BitString r_a = BitString::zeros(n);
    for (uint32_t i = 0; i < n; ++i) {
        r_a.set_bit(i, chi_encode_and_measure(ctx.store(), da.payload[i],
                                              (input.x >> i) & 1, alice_rng));
    }
    ctx.add_event(MeasurementEvent{Party::Alice, "R_a", "Z readout after encoding", r_a});

    Rng& bob_rng = ctx.rng("bob");
    BitString r_b = BitString::zeros(n);
    for (uint32_t i = 0; i < n; ++i) {
        r_b.set_bit(i, chi_encode_and_measure(ctx.store(), db.payload[i],
                                              (input.y >> i) & 1, bob_rng));
    }
    ctx.add_event(MeasurementEvent{Party::Bob, "R_b", "Z readout after encoding", r_b});

    // Alice hands R_a to Bob in the clear; Bob aggregates and reports R.
    ctx.add_event(ClassicalMessageEvent{Party::Alice, Party::Bob, "", "relay of R_a", r_a, {}});
    const BitString r = r_a ^ r_b;
    ctx.add_event(ClassicalMessageEvent{Party::Bob, Party::TP, "R", "R_a xor R_b", r, {}});

    BitString r_t, codes;
    const SessionResult verdict = chi_tp_verdict(ctx.store(), r, retained, ctx.rng("tp"), &r_t, &codes);
    ctx.add_event(MeasurementEvent{Party::TP, "tp_codes", "Bell codes of retained pairs", codes});
    ctx.add_event(MeasurementEvent{Party::TP, "R_t", "0 for phi-type, 1 for psi-type", r_t});
    return ctx.finish(verdict);
}

std::vector<ChiRound> chi_rounds(const Transcript& t) {
    const auto r_a = t.named_bits("R_a");
    const auto r_b = t.named_bits("R_b");
    const auto r = t.named_bits("R");
    const auto r_t = t.named_bits("R_t");
    if (!r_a || !r_b || !r || !r_t) {
        throw std::invalid_argument("transcript is not a completed chi session");
    }
    std::vector<ChiRound> rounds;
    for (uint32_t i = 0; i < t.n_bits; ++i) {
        rounds.push_back(ChiRound{i, r_a->bit(i), r_b->bit(i), r->bit(i), r_t->bit(i)});
    }
    return rounds;
}

}  // namespace qpc
