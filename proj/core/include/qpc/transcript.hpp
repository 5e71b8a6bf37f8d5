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

#ifndef QPC_TRANSCRIPT_HPP
#define QPC_TRANSCRIPT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpc/bits.hpp"
#include "qpc/config.hpp"
#include "qpc/types.hpp"

namespace qpc {

struct CheckReport {
    uint32_t positions_checked = 0;
    uint32_t mismatches = 0;
    double error_rate = 0.0;  // mismatches / positions_checked, 0 when none
    bool passed = true;       // error_rate <= threshold
};

CheckReport make_check_report(uint32_t checked, uint32_t mismatches, double threshold);

// Transcript events. Paper-named protocol values (K_A, C, R_a, R_t, R_A, ...)
// carry their canonical name on exactly one event, at the point the value
// first exists; relays of the same bits have an empty name and a note. That
// keeps "each named value appears exactly once per session" checkable.
struct QubitTransferEvent {
    std::string channel;
    std::vector<uint32_t> qubit_ids;
};

struct ClassicalMessageEvent {
    Party from;
    Party to;
    std::string name;  // canonical value name, or "" for relays/auxiliary
    std::string note;
    BitString bits;
    std::optional<uint64_t> number;  // integer payloads (swap's R)
};

struct MeasurementEvent {
    Party party;
    std::string name;
    std::string note;
    BitString bits;
};

struct ComputationEvent {
    Party party;
    std::string name;
    std::string note;
    BitString bits;
};

struct CheckEvent {
    std::string channel;
    std::string check_kind;  // "decoy" or "epr"
    std::vector<uint32_t> positions;
    std::string bases;  // per-decoy prep basis letters; empty for EPR checks
    CheckReport report;
};

struct WarningEvent {
    std::string text;
};

struct VerdictEvent {
    SessionResult result;
};

using Event = std::variant<QubitTransferEvent, ClassicalMessageEvent, MeasurementEvent,
                           ComputationEvent, CheckEvent, WarningEvent, VerdictEvent>;

/// Eve's private record of one interception. Never visible to the parties.
struct EveLogEntry {
    std::string channel;
    uint32_t position;  // index within the transmitted sequence
    uint32_t qubit_id;
    char basis;  // 'Z' or 'X'
    uint8_t outcome;
};

// Full record of one session: every classical message, qubit transfer, check
// and measurement, in order, plus the hidden adversary log. Serializes to
// the versioned JSON schema "qpc-transcript-v1" (see README).
struct Transcript {
    std::string session_id;
    Protocol protocol = Protocol::Ghz;
    uint32_t n_bits = 0;
    uint64_t x = 0;
    uint64_t y = 0;
    uint64_t trial = 0;
    SessionConfig config;
    std::vector<Event> events;
    std::vector<EveLogEntry> eve_log;
    SessionResult result = SessionResult::Aborted;

    std::string to_json() const;

    /// Bits of the unique event carrying `name`, if present.
    std::optional<BitString> named_bits(std::string_view name) const;
    /// Number of events carrying `name` as their canonical name.
    uint32_t named_count(std::string_view name) const;
    bool any_check_failed() const;
};

}  // namespace qpc

#endif
