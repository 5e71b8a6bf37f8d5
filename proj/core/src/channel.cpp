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

#include "qpc/channel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpc {

namespace {

/// Floyd's algorithm: uniform d-subset of [0, m), returned sorted.
std::vector<uint32_t> sample_positions(uint32_t d, uint32_t m, Rng& rng) {
    std::set<uint32_t> chosen;
    for (uint32_t j = m - d; j < m; ++j) {
        const uint32_t t = static_cast<uint32_t>(rng.next_below(j + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

char eve_basis(BasisStrategy strategy, Rng& rng) {
    switch (strategy) {
        case BasisStrategy::AlwaysZ: return 'Z';
        case BasisStrategy::AlwaysX: return 'X';
        case BasisStrategy::UniformRandom: return rng.next_bit() ? 'X' : 'Z';
    }
    return 'Z';
}

/// Interleaves extras into payload at the given sorted positions.
std::vector<QubitId> interleave(const std::vector<QubitId>& payload,
                                const std::vector<QubitId>& extras,
                                const std::vector<uint32_t>& positions) {
    std::vector<QubitId> seq(payload.size() + extras.size(), 0);
    for (size_t k = 0; k < extras.size(); ++k) seq[positions[k]] = extras[k];
    size_t next = 0;
    for (QubitId id : payload) {
        while (seq[next] != 0) ++next;
        seq[next] = id;
    }
    return seq;
}

}  // namespace

Channel make_channel(Party from, Party to) {
    return Channel{from, to, std::string(to_string(from)) + "->" + std::string(to_string(to))};
}

std::vector<std::string> protocol_channels(Protocol p) {
    switch (p) {
        case Protocol::Ghz:
        case Protocol::Chi:
            return {"tp->alice", "tp->bob"};
        case Protocol::Swap:
            return {"alice->tp", "tp->alice", "bob->tp", "tp->bob"};
    }
    return {};
}

char decoy_basis(DecoyState s) {
    return (s == DecoyState::Z0 || s == DecoyState::Z1) ? 'Z' : 'X';
}

int decoy_bit(DecoyState s) {
    return (s == DecoyState::Z1 || s == DecoyState::Xminus) ? 1 : 0;
}

StateVector decoy_state_vector(DecoyState s) {
    switch (s) {
        case DecoyState::Z0: return StateVector(1);
        case DecoyState::Z1: return apply_pauli(StateVector(1), 0, PauliOp::X);
        case DecoyState::Xplus:
            return StateVector::from_amplitudes(1, {kInvSqrt2, kInvSqrt2});
        case DecoyState::Xminus:
            return StateVector::from_amplitudes(1, {kInvSqrt2, -kInvSqrt2});
    }
    throw std::invalid_argument("bad decoy state");
}

std::vector<QubitId> transmit_qubits(SessionContext& ctx, const Channel& channel,
                                     std::vector<QubitId> sequence) {
    ctx.add_event(QubitTransferEvent{channel.name, sequence});
    const AttackConfig& attack = ctx.config().attack;
    if (attack.kind == AttackKind::InterceptResend && attack.targets(channel.name)) {
        Rng& rng = ctx.rng("eve:" + channel.name);
        for (uint32_t pos = 0; pos < sequence.size(); ++pos) {
            const char basis = eve_basis(attack.basis, rng);
            const int outcome = ctx.store().collapse_resend(sequence[pos], basis, rng);
            ctx.log_eve(EveLogEntry{channel.name, pos, sequence[pos], basis,
                                    static_cast<uint8_t>(outcome)});
        }
    }
    return sequence;
}

std::pair<std::vector<QubitId>, std::vector<DecoyRecord>> insert_decoys(
    SessionContext& ctx, const Channel& channel, const std::vector<QubitId>& payload) {
    const uint32_t d = ctx.config().decoys_per_channel;
    if (d == 0) return {payload, {}};
    Rng& rng = ctx.rng("decoys:" + channel.name);

    std::vector<DecoyRecord> records(d);
    std::vector<QubitId> decoy_ids(d);
    for (uint32_t k = 0; k < d; ++k) {
        const auto state = static_cast<DecoyState>(rng.next_below(4));
        records[k].state = state;
        decoy_ids[k] = ctx.store().add_qubit(decoy_state_vector(state));
        records[k].id = decoy_ids[k];
    }
    const std::vector<uint32_t> positions =
        sample_positions(d, static_cast<uint32_t>(payload.size()) + d, rng);
    for (uint32_t k = 0; k < d; ++k) records[k].position = positions[k];

    return {interleave(payload, decoy_ids, positions), records};
}

CheckReport run_decoy_check(SessionContext& ctx, const Channel& channel,
                            const std::vector<DecoyRecord>& records, uint32_t sequence_len) {
    std::vector<uint32_t> positions;
    std::string bases;
    for (const DecoyRecord& r : records) {
        if (r.position >= sequence_len) throw std::logic_error("decoy position out of sequence");
        if (!positions.empty() && r.position <= positions.back()) {
            throw std::logic_error("decoy positions must be strictly increasing");
        }
        positions.push_back(r.position);
        bases.push_back(decoy_basis(r.state));
    }

    Rng& rng = ctx.rng("check:" + channel.name);
    uint32_t mismatches = 0;
    for (const DecoyRecord& r : records) {
        const char basis = decoy_basis(r.state);
        const int bit = basis == 'Z' ? ctx.store().measure_z(r.id, rng)
                                     : ctx.store().measure_x(r.id, rng);
        if (bit != decoy_bit(r.state)) ++mismatches;
    }
    const CheckReport report = make_check_report(static_cast<uint32_t>(records.size()),
                                                 mismatches, ctx.config().check_threshold);
    ctx.add_event(CheckEvent{channel.name, "decoy", std::move(positions), std::move(bases), report});
    return report;
}

GuardedDelivery send_with_decoy_check(SessionContext& ctx, const Channel& channel,
                                      const std::vector<QubitId>& payload) {
    auto [sequence, records] = insert_decoys(ctx, channel, payload);
    transmit_qubits(ctx, channel, sequence);
    const CheckReport report =
        run_decoy_check(ctx, channel, records, static_cast<uint32_t>(sequence.size()));
    return {payload, report};
}

GuardedDelivery send_with_epr_check(SessionContext& ctx, const Channel& channel,
                                    const std::vector<QubitId>& payload) {
    const uint32_t d = ctx.config().decoys_per_channel;
    Rng& rng = ctx.rng("decoys:" + channel.name);

    std::vector<EprCheckRecord> records(d);
    std::vector<QubitId> sent_ids(d);
    for (uint32_t k = 0; k < d; ++k) {
        const std::vector<QubitId> ids = ctx.store().add_state(prepare_bell(BellKind::PhiPlus));
        records[k].retained = ids[0];
        records[k].sent = ids[1];
        sent_ids[k] = ids[1];
    }
    std::vector<uint32_t> positions;
    if (d > 0) {
        positions = sample_positions(d, static_cast<uint32_t>(payload.size()) + d, rng);
        for (uint32_t k = 0; k < d; ++k) records[k].position = positions[k];
    }

    transmit_qubits(ctx, channel, interleave(payload, sent_ids, positions));

    Rng& check_rng = ctx.rng("check:" + channel.name);
    uint32_t mismatches = 0;
    for (const EprCheckRecord& r : records) {
        if (ctx.store().measure_bell(r.retained, r.sent, check_rng) != BellKind::PhiPlus) {
            ++mismatches;
        }
    }
    const CheckReport report = make_check_report(d, mismatches, ctx.config().check_threshold);
    ctx.add_event(CheckEvent{channel.name, "epr", std::move(positions), "", report});
    return {payload, report};
}

}  // namespace qpc
