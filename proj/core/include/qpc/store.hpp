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

#ifndef QPC_STORE_HPP
#define QPC_STORE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qpc/bits.hpp"
#include "qpc/rng.hpp"
#include "qpc/statevector.hpp"

namespace qpc {

/// Stable handle to one qubit held somewhere in a session. Ids are assigned
/// sequentially from 1 and survive transit (including intercept-resend).
using QubitId = uint32_t;

// Pool of entangled registers behind stable qubit handles. Measuring a qubit
// consumes it: the handle dies and its register shrinks. A Bell measurement
// across two registers first merges them (tensor), so no register ever
// exceeds the kernel's 8-qubit cap as long as merged groups stay small.
class QubitStore {
  public:
    /// Adopts a state; returns one handle per qubit, in register order.
    std::vector<QubitId> add_state(StateVector s);

    /// Convenience for a fresh single qubit.
    QubitId add_qubit(StateVector one_qubit);

    int measure_z(QubitId q, Rng& rng);
    int measure_x(QubitId q, Rng& rng);
    BellKind measure_bell(QubitId q1, QubitId q2, Rng& rng);
    void apply_pauli(QubitId q, PauliOp op);

    // Intercept-resend primitive: measures q in the given basis ('Z' or 'X'),
    // collapsing whatever it was entangled with, and rebinds the same handle
    // to the fresh post-measurement basis state. Returns the outcome bit.
    int collapse_resend(QubitId q, char basis, Rng& rng);

    bool contains(QubitId q) const { return slots_.contains(q); }
    size_t live_qubits() const { return slots_.size(); }

    /// Register currently holding q (for tests and analysis).
    const StateVector& group_state(QubitId q) const;
    size_t group_size(QubitId q) const;
    uint32_t position_of(QubitId q) const;

  private:
    struct Slot {
        uint32_t state;
        uint32_t pos;
    };

    std::vector<StateVector> states_;
    std::vector<std::vector<QubitId>> members_;  // per state, handle at each position
    std::unordered_map<QubitId, Slot> slots_;
    QubitId next_id_ = 1;

    const Slot& slot_of(QubitId q) const;
    void renumber(uint32_t state_index);
    uint32_t merge(uint32_t s1, uint32_t s2);
};

// Measures every handle in order; bit i of the result is the i-th outcome.
// The sequences the protocols use are at most 64 qubits long.
BitString measure_sequence_z(QubitStore& store, const std::vector<QubitId>& seq, Rng& rng);
BitString measure_sequence_x(QubitStore& store, const std::vector<QubitId>& seq, Rng& rng);

}  // namespace qpc

#endif
