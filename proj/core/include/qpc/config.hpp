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

#ifndef QPC_CONFIG_HPP
#define QPC_CONFIG_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/types.hpp"

namespace qpc {

enum class AttackKind { None, InterceptResend };
enum class BasisStrategy { AlwaysZ, AlwaysX, UniformRandom };

struct AttackConfig {
    AttackKind kind = AttackKind::None;
    BasisStrategy basis = BasisStrategy::UniformRandom;
    /// Channel names ("tp->alice", "alice->tp", ...); empty means every channel.
    std::vector<std::string> target_channels;

    bool targets(std::string_view channel) const {
        if (kind == AttackKind::None) return false;
        if (target_channels.empty()) return true;
        return std::find(target_channels.begin(), target_channels.end(), channel) !=
               target_channels.end();
    }
};

// The pair of private inputs under comparison. x and y are N-bit values in
// the little-endian bit expansion x = sum_i x_i 2^i. Any value in [0, 2^N)
// is accepted; N alone fixes the comparison width.
struct ComparisonInput {
    uint64_t x = 0;
    uint64_t y = 0;
    uint32_t n_bits = 1;

    static constexpr uint32_t kMaxBits = 32;

    /// Throws std::invalid_argument when out of contract.
    void validate() const;
};

struct SessionConfig {
    uint64_t seed = 0;
    /// Decoy qubits (ghz/chi) or EPR check pairs (swap) per channel direction.
    uint32_t decoys_per_channel = 8;
    /// A check passes iff its error rate is <= this threshold. Must be in [0, 1).
    double check_threshold = 0.0;
    AttackConfig attack;

    void validate() const;
};

std::string_view to_string(AttackKind k);
std::string_view to_string(BasisStrategy s);

}  // namespace qpc

#endif
