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

#ifndef QPC_TYPES_HPP
#define QPC_TYPES_HPP

#include <optional>
#include <string_view>

namespace qpc {

enum class Protocol { Ghz, Chi, Swap };
enum class Party { Alice, Bob, TP };
enum class SessionResult { Equal, NotEqual, Aborted };

constexpr std::string_view to_string(Protocol p) {
    switch (p) {
        case Protocol::Ghz: return "ghz";
        case Protocol::Chi: return "chi";
        case Protocol::Swap: return "swap";
    }
    return "?";
}

constexpr std::string_view to_string(Party p) {
    switch (p) {
        case Party::Alice: return "alice";
        case Party::Bob: return "bob";
        case Party::TP: return "tp";
    }
    return "?";
}

constexpr std::string_view to_string(SessionResult r) {
    switch (r) {
        case SessionResult::Equal: return "equal";
        case SessionResult::NotEqual: return "not_equal";
        case SessionResult::Aborted: return "aborted";
    }
    return "?";
}

constexpr std::optional<Protocol> parse_protocol(std::string_view s) {
    if (s == "ghz") return Protocol::Ghz;
    if (s == "chi") return Protocol::Chi;
    if (s == "swap") return Protocol::Swap;
    return std::nullopt;
}

}  // namespace qpc

#endif
