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

#include "qpc/protocol_swap.hpp"

#include <bit>
#include <stdexcept>

#include "qpc/channel.hpp"

namespace qpc {

namespace {

struct PairSet {
    std::vector<QubitId> kept;  // particle 1 of each pair
    std::vector<QubitId> sent;  // particle 2, to be exchanged
};

PairSet prepare_pairs(QubitStore& store, uint32_t n_chunks) {
    PairSet set;
    for (uint32_t j = 0; j < n_chunks; ++j) {
        const std::vector<QubitId> ids = store.add_state(prepare_bell(BellKind::PhiPlus));
        set.kept.push_back(ids[0]);
        set.sent.push_back(ids[1]);
    }
    return set;
}

BitString codes_to_bits(const std::vector<uint8_t>& codes) {
    BitString out = BitString::zeros(2 * static_cast<uint32_t>(codes.size()));
    for (uint32_t j = 0; j < codes.size(); ++j) {
        out.set_bit(2 * j, codes[j] & 1);
        out.set_bit(2 * j + 1, (codes[j] >> 1) & 1);
    }
    return out;
}

// One player<->TP exchange: both directions transported with EPR check
// guards, then the player and TP Bell-measure their mixed pairs. Returns
// (player codes, tp codes) plus the two check reports.
struct ExchangeOutcome {
    std::vector<uint8_t> player_codes;
    std::vector<uint8_t> tp_codes;
    CheckReport to_tp_report;
    CheckReport from_tp_report;
    bool measured = false;
};

ExchangeOutcome run_exchange(SessionContext& ctx, Party player, const PairSet& player_pairs,
                             const PairSet& tp_pairs, const std::string& tp_stream) {
    ExchangeOutcome out;
    const GuardedDelivery to_tp =
        send_with_epr_check(ctx, make_channel(player, Party::TP), player_pairs.sent);
    const GuardedDelivery from_tp =
        send_with_epr_check(ctx, make_channel(Party::TP, player), tp_pairs.sent);
    out.to_tp_report = to_tp.report;
    out.from_tp_report = from_tp.report;
    if (!to_tp.report.passed || !from_tp.report.passed) return out;

    Rng& player_rng = ctx.rng(std::string(to_string(player)));
    Rng& tp_rng = ctx.rng(tp_stream);
    for (uint32_t j = 0; j < player_pairs.kept.size(); ++j) {
        out.player_codes.push_back(
            swap_measure(ctx.store(), player_pairs.kept[j], from_tp.payload[j], player_rng));
        out.tp_codes.push_back(
            swap_measure(ctx.store(), tp_pairs.kept[j], to_tp.payload[j], tp_rng));
    }
    out.measured = true;
    return out;
}

}  // namespace

uint32_t swap_chunk_count(uint32_t n_bits) {
    return (n_bits + 1) / 2;
}

uint8_t swap_chunk(uint64_t value, uint32_t j) {
    return static_cast<uint8_t>((value >> (2 * j)) & 3u);
}

uint8_t swap_measure(QubitStore& store, QubitId retained, QubitId received, Rng& rng) {
    return bell_code(store.measure_bell(retained, received, rng));
}

std::pair<SessionResult, uint64_t> swap_combine_and_verdict(const std::vector<SwapRound>& rounds) {
    if (rounds.empty()) throw std::invalid_argument("no rounds to combine");
    uint64_t r_total = 0;
    for (const SwapRound& round : rounds) {
        r_total += std::popcount(static_cast<unsigned>(round.r ^ round.r_c));
    }
    return {r_total == 0 ? SessionResult::Equal : SessionResult::NotEqual, r_total};
}

Transcript run_swap_session(const ComparisonInput& input, const SessionConfig& config,
                            uint64_t trial, SwapOrder order) {
    SessionContext ctx(Protocol::Swap, input, config, trial);
    const uint32_t n_chunks = swap_chunk_count(input.n_bits);
    const uint32_t padded = 2 * n_chunks;

    // Step 1 pair sets; TP keeps an independent set per counterpart so the
    // two swaps never share collapsed particles.
    const PairSet alice = prepare_pairs(ctx.store(), n_chunks);
    const PairSet bob = prepare_pairs(ctx.store(), n_chunks);
    const PairSet tp_for_alice = prepare_pairs(ctx.store(), n_chunks);
    const PairSet tp_for_bob = prepare_pairs(ctx.store(), n_chunks);

    ExchangeOutcome alice_ex, bob_ex;
    if (order == SwapOrder::AliceFirst) {
        alice_ex = run_exchange(ctx, Party::Alice, alice, tp_for_alice, "tp:alice-side");
        bob_ex = run_exchange(ctx, Party::Bob, bob, tp_for_bob, "tp:bob-side");
    } else {
        bob_ex = run_exchange(ctx, Party::Bob, bob, tp_for_bob, "tp:bob-side");
        alice_ex = run_exchange(ctx, Party::Alice, alice, tp_for_alice, "tp:alice-side");
    }
    if (!alice_ex.measured || !bob_ex.measured) {
        return ctx.finish(SessionResult::Aborted);
    }

    const BitString r_a_bits = codes_to_bits(alice_ex.player_codes);
    ctx.add_event(MeasurementEvent{Party::Alice, "R_A", "Bell codes, 2 bits per round", r_a_bits});
    const BitString r_b_bits = codes_to_bits(bob_ex.player_codes);
    ctx.add_event(MeasurementEvent{Party::Bob, "R_B", "Bell codes, 2 bits per round", r_b_bits});
    const BitString tp_alice_bits = codes_to_bits(alice_ex.tp_codes);
    ctx.add_event(MeasurementEvent{Party::TP, "tp_codes_alice", "alice-side Bell codes", tp_alice_bits});
    const BitString tp_bob_bits = codes_to_bits(bob_ex.tp_codes);
    ctx.add_event(MeasurementEvent{Party::TP, "tp_codes_bob", "bob-side Bell codes", tp_bob_bits});
    const BitString r_c_bits = tp_alice_bits ^ tp_bob_bits;
    ctx.add_event(ComputationEvent{Party::TP, "R_C", "alice-side xor bob-side codes", r_c_bits});

    const BitString x_pad = BitString::of(input.x, input.n_bits).zero_extended(padded);
    const BitString y_pad = BitString::of(input.y, input.n_bits).zero_extended(padded);
    const BitString masked_a = r_a_bits ^ x_pad;
    ctx.add_event(ClassicalMessageEvent{Party::Alice, Party::Bob, "", "R_A xor x", masked_a, {}});
    const BitString r_j = masked_a ^ (r_b_bits ^ y_pad);
    ctx.add_event(ClassicalMessageEvent{Party::Bob, Party::TP, "R_j",
                                        "(R_A xor x) xor (R_B xor y)", r_j, {}});

    const uint64_t r_total = (r_j ^ r_c_bits).count_ones();
    ctx.add_event(ClassicalMessageEvent{Party::TP, Party::Alice, "R",
                                        "sum of per-round differences", BitString{}, r_total});
    ctx.add_event(ClassicalMessageEvent{Party::TP, Party::Bob, "", "relay of R", BitString{}, r_total});
    return ctx.finish(r_total == 0 ? SessionResult::Equal : SessionResult::NotEqual);
}

std::vector<SwapRound> swap_rounds(const Transcript& t) {
    const auto r_a = t.named_bits("R_A");
    const auto r_b = t.named_bits("R_B");
    const auto r_c = t.named_bits("R_C");
    const auto r_j = t.named_bits("R_j");
    if (!r_a || !r_b || !r_c || !r_j) {
        throw std::invalid_argument("transcript is not a completed swap session");
    }
    const uint32_t n_chunks = swap_chunk_count(t.n_bits);
    std::vector<SwapRound> rounds;
    for (uint32_t j = 0; j < n_chunks; ++j) {
        SwapRound round;
        round.chunk_index = j;
        round.x_chunk = swap_chunk(t.x, j);
        round.y_chunk = swap_chunk(t.y, j);
        round.r_a = swap_chunk(r_a->value, j);
        round.r_b = swap_chunk(r_b->value, j);
        round.r_c = swap_chunk(r_c->value, j);
        round.r = swap_chunk(r_j->value, j);
        rounds.push_back(round);
    }
    return rounds;
}

}  // namespace qpc
