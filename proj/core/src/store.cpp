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

#include "qpc/store.hpp"

#include <stdexcept>
#include <utility>

namespace qpc {

std::vector<QubitId> QubitStore::add_state(StateVector s) {
    const uint32_t n = s.num_qubits();
    const uint32_t idx = static_cast<uint32_t>(states_.size());
    states_.push_back(std::move(s));
    members_.emplace_back();
    std::vector<QubitId> ids;
    ids.reserve(n);
    for (uint32_t p = 0; p < n; ++p) {
        const QubitId id = next_id_++;
        ids.push_back(id);
        members_[idx].push_back(id);
        slots_[id] = Slot{idx, p};
    }
    return ids;
}

QubitId QubitStore::add_qubit(StateVector one_qubit) {
    if (one_qubit.num_qubits() != 1) throw std::invalid_argument("add_qubit wants a 1-qubit state");
    return add_state(std::move(one_qubit))[0];
}

const QubitStore::Slot& QubitStore::slot_of(QubitId q) const {
    auto it = slots_.find(q);
    if (it == slots_.end()) throw std::out_of_range("unknown or already consumed qubit handle");
    return it->second;
}

void QubitStore::renumber(uint32_t state_index) {
    auto& ids = members_[state_index];
    for (uint32_t p = 0; p < ids.size(); ++p) {
        slots_[ids[p]] = Slot{state_index, p};
    }
}

uint32_t QubitStore::merge(uint32_t s1, uint32_t s2) {
    states_[s1] = tensor(states_[s1], states_[s2]);
    auto& dst = members_[s1];
    for (QubitId id : members_[s2]) dst.push_back(id);
    members_[s2].clear();
    states_[s2] = StateVector(0);
    renumber(s1);
    return s1;
}

int QubitStore::measure_z(QubitId q, Rng& rng) {
    const Slot slot = slot_of(q);
    MeasurementResult r = qpc::measure_z(states_[slot.state], slot.pos, rng);
    states_[slot.state] = std::move(r.post_state);
    members_[slot.state].erase(members_[slot.state].begin() + slot.pos);
    slots_.erase(q);
    renumber(slot.state);
    return r.outcome;
}

int QubitStore::measure_x(QubitId q, Rng& rng) {
    const Slot slot = slot_of(q);
    MeasurementResult r = qpc::measure_x(states_[slot.state], slot.pos, rng);
    states_[slot.state] = std::move(r.post_state);
    members_[slot.state].erase(members_[slot.state].begin() + slot.pos);
    slots_.erase(q);
    renumber(slot.state);
    return r.outcome;
}

BellKind QubitStore::measure_bell(QubitId q1, QubitId q2, Rng& rng) {
    if (q1 == q2) throw std::invalid_argument("Bell measurement needs two distinct qubits");
    Slot a = slot_of(q1);
    Slot b = slot_of(q2);
    if (a.state != b.state) {
        merge(a.state, b.state);
        a = slot_of(q1);
        b = slot_of(q2);
    }
    BellMeasurementResult r = qpc::measure_bell(states_[a.state], a.pos, b.pos, rng);
    states_[a.state] = std::move(r.post_state);
    auto& ids = members_[a.state];
    ids.erase(ids.begin() + std::max(a.pos, b.pos));
    ids.erase(ids.begin() + std::min(a.pos, b.pos));
    slots_.erase(q1);
    slots_.erase(q2);
    renumber(a.state);
    return r.outcome;
}

void QubitStore::apply_pauli(QubitId q, PauliOp op) {
    const Slot slot = slot_of(q);
    states_[slot.state] = qpc::apply_pauli(states_[slot.state], slot.pos, op);
}

int QubitStore::collapse_resend(QubitId q, char basis, Rng& rng) {
    int outcome;
    if (basis == 'Z') {
        outcome = measure_z(q, rng);
    } else if (basis == 'X') {
        outcome = measure_x(q, rng);
    } else {
        throw std::invalid_argument("basis must be 'Z' or 'X'");
    }
    StateVector fresh(1);
    if (basis == 'Z' && outcome == 1) fresh = qpc::apply_pauli(fresh, 0, PauliOp::X);
    if (basis == 'X') {
        std::vector<Complex> amps{kInvSqrt2, outcome ? -kInvSqrt2 : kInvSqrt2};
        fresh = StateVector::from_amplitudes(1, std::move(amps));
    }
    // Rebind the original handle to the resent qubit.
    const uint32_t idx = static_cast<uint32_t>(states_.size());
    states_.push_back(std::move(fresh));
    members_.push_back({q});
    slots_[q] = Slot{idx, 0};
    return outcome;
}

const StateVector& QubitStore::group_state(QubitId q) const {
    return states_[slot_of(q).state];
}

size_t QubitStore::group_size(QubitId q) const {
    return members_[slot_of(q).state].size();
}

uint32_t QubitStore::position_of(QubitId q) const {
    return slot_of(q).pos;
}

BitString measure_sequence_z(QubitStore& store, const std::vector<QubitId>& seq, Rng& rng) {
    BitString out = BitString::zeros(static_cast<uint32_t>(seq.size()));
    for (uint32_t i = 0; i < seq.size(); ++i) out.set_bit(i, store.measure_z(seq[i], rng));
    return out;
}

BitString measure_sequence_x(QubitStore& store, const std::vector<QubitId>& seq, Rng& rng) {
    BitString out = BitString::zeros(static_cast<uint32_t>(seq.size()));
    for (uint32_t i = 0; i < seq.size(); ++i) out.set_bit(i, store.measure_x(seq[i], rng));
    return out;
}

}  // namespace qpc
