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

#include "qpc/session.hpp"

#include <cstdio>
#include <stdexcept>

#include "qpc/protocol_chi.hpp"
#include "qpc/protocol_ghz.hpp"
#include "qpc/protocol_swap.hpp"

namespace qpc {

void ComparisonInput::validate() const {
    if (n_bits < 1 || n_bits > kMaxBits) {
        throw std::invalid_argument("n_bits must be in [1, " + std::to_string(kMaxBits) + "]");
    }
    const uint64_t limit = uint64_t{1} << n_bits;
    if (x >= limit || y >= limit) {
        throw std::invalid_argument("inputs must be below 2^n_bits");
    }
}

void SessionConfig::validate() const {
    if (check_threshold < 0.0 || check_threshold >= 1.0) {
        throw std::invalid_argument("check_threshold must be in [0, 1)");
    }
}

std::string_view to_string(AttackKind k) {
    return k == AttackKind::None ? "none" : "intercept-resend";
}

std::string_view to_string(BasisStrategy s) {
    switch (s) {
        case BasisStrategy::AlwaysZ: return "z";
        case BasisStrategy::AlwaysX: return "x";
        case BasisStrategy::UniformRandom: return "random";
    }
    return "?";
}

std::string make_session_id(Protocol protocol, uint64_t seed, uint64_t trial) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s-%016llx-t%llu", std::string(to_string(protocol)).c_str(),
                  static_cast<unsigned long long>(seed), static_cast<unsigned long long>(trial));
    return buf;
}

SessionContext::SessionContext(Protocol protocol, const ComparisonInput& input,
                               const SessionConfig& config, uint64_t trial)
    : input_(input), config_(config), session_seed_(derive_seed(config.seed, trial)) {
    input_.validate();
    config_.validate();
    transcript_.session_id = make_session_id(protocol, config.seed, trial);
    transcript_.protocol = protocol;
    transcript_.n_bits = input.n_bits;
    transcript_.x = input.x;
    transcript_.y = input.y;
    transcript_.trial = trial;
    transcript_.config = config;
    if (config_.decoys_per_channel == 0 && config_.attack.kind != AttackKind::None) {
        add_event(WarningEvent{
            "attack configured with zero decoys per channel: "
            "no eavesdropping check can trigger, abort statistics are meaningless"});
    }
}

Rng& SessionContext::rng(std::string_view tag) {
    auto it = streams_.find(tag);
    if (it == streams_.end()) {
        it = streams_.emplace(std::string(tag), Rng(derive_seed(session_seed_, hash_tag(tag))))
                 .first;
    }
    return it->second;
}

Transcript SessionContext::finish(SessionResult result) {
    add_event(VerdictEvent{result});
    transcript_.result = result;
    return std::move(transcript_);
}

Transcript run_session(Protocol protocol, const ComparisonInput& input,
                       const SessionConfig& config, uint64_t trial) {
    switch (protocol) {
        case Protocol::Ghz: return run_ghz_session(input, config, trial);
        case Protocol::Chi: return run_chi_session(input, config, trial);
        case Protocol::Swap: return run_swap_session(input, config, trial);
    }
    throw std::invalid_argument("unknown protocol");
}

}  // namespace qpc
