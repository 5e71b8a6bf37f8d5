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

#ifndef QPC_SESSION_HPP
#define QPC_SESSION_HPP

#include <map>
#include <string>
#include <string_view>

#include "qpc/config.hpp"
#include "qpc/store.hpp"
#include "qpc/transcript.hpp"
#include "qpc/types.hpp"

namespace qpc {

// One protocol session in flight. All randomness flows from
// derive_seed(config.seed, trial) through named substreams, one per logical
// actor or channel phase, so replays are byte-identical and causally
// unrelated phases draw from independent streams.
class SessionContext {
  public:
    SessionContext(Protocol protocol, const ComparisonInput& input, const SessionConfig& config,
                   uint64_t trial);

    Rng& rng(std::string_view tag);

    QubitStore& store() { return store_; }
    Transcript& transcript() { return transcript_; }
    const ComparisonInput& input() const { return input_; }
    const SessionConfig& config() const { return config_; }

    void add_event(Event e) { transcript_.events.push_back(std::move(e)); }
    void log_eve(EveLogEntry e) { transcript_.eve_log.push_back(std::move(e)); }

    /// Records the verdict event, sets the result, and returns the transcript.
    Transcript finish(SessionResult result);

  private:
    ComparisonInput input_;
    SessionConfig config_;
    uint64_t session_seed_;
    QubitStore store_;
    Transcript transcript_;
    std::map<std::string, Rng, std::less<>> streams_;
};

std::string make_session_id(Protocol protocol, uint64_t seed, uint64_t trial);

/// Runs one full session of the chosen protocol and returns its transcript.
Transcript run_session(Protocol protocol, const ComparisonInput& input,
                       const SessionConfig& config, uint64_t trial = 0);

}  // namespace qpc

#endif
