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

// Internal JSON helpers shared by the serialization code. Not installed.

#ifndef QPC_SRC_JSON_UTIL_HPP
#define QPC_SRC_JSON_UTIL_HPP

#include <cstdio>
#include <string>

#include "json.hpp"
#include "qpc/bits.hpp"
#include "qpc/config.hpp"

namespace qpc::detail {

using Json = nlohmann::ordered_json;

inline std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline Json bits_json(const BitString& b) {
    return Json{{"len", b.len}, {"hex", b.to_hex()}};
}

inline Json config_json(const SessionConfig& c) {
    Json attack;
    attack["kind"] = std::string(to_string(c.attack.kind));
    if (c.attack.kind != AttackKind::None) {
        attack["basis"] = std::string(to_string(c.attack.basis));
        attack["channels"] =
            c.attack.target_channels.empty() ? Json("all") : Json(c.attack.target_channels);
    }
    return Json{
        {"seed_hex", hex64(c.seed)},
        {"decoys_per_channel", c.decoys_per_channel},
        {"check_threshold", c.check_threshold},
        {"attack", attack},
    };
}

}  // namespace qpc::detail

#endif
