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

#include "qpc/transcript.hpp"

#include <stdexcept>

#include "json_util.hpp"

namespace qpc {

namespace {

using detail::Json;
using detail::bits_json;
using detail::config_json;

struct EventToJson {
    Json operator()(const QubitTransferEvent& e) const {
        return Json{{"kind", "qubit_transfer"}, {"channel", e.channel}, {"qubit_ids", e.qubit_ids}};
    }
    Json operator()(const ClassicalMessageEvent& e) const {
        Json j{{"kind", "classical"},
               {"from", std::string(to_string(e.from))},
               {"to", std::string(to_string(e.to))},
               {"name", e.name},
               {"note", e.note},
               {"bits", bits_json(e.bits)}};
        if (e.number) j["number"] = *e.number;
        return j;
    }
    Json operator()(const MeasurementEvent& e) const {
        return Json{{"kind", "measurement"},
                    {"party", std::string(to_string(e.party))},
                    {"name", e.name},
                    {"note", e.note},
                    {"bits", bits_json(e.bits)}};
    }
    Json operator()(const ComputationEvent& e) const {
        return Json{{"kind", "computation"},
                    {"party", std::string(to_string(e.party))},
                    {"name", e.name},
                    {"note", e.note},
                    {"bits", bits_json(e.bits)}};
    }
    Json operator()(const CheckEvent& e) const {
        return Json{{"kind", "check"},
                    {"channel", e.channel},
                    {"check_kind", e.check_kind},
                    {"positions", e.positions},
                    {"bases", e.bases},
                    {"positions_checked", e.report.positions_checked},
                    {"mismatches", e.report.mismatches},
                    {"error_rate", e.report.error_rate},
                    {"passed", e.report.passed}};
    }
    Json operator()(const WarningEvent& e) const {
        return Json{{"kind", "warning"}, {"text", e.text}};
    }
    Json operator()(const VerdictEvent& e) const {
        return Json{{"kind", "verdict"}, {"result", std::string(to_string(e.result))}};
    }
};

const std::string* event_name(const Event& ev) {
    if (const auto* m = std::get_if<MeasurementEvent>(&ev)) return &m->name;
    if (const auto* c = std::get_if<ClassicalMessageEvent>(&ev)) return &c->name;
    if (const auto* c = std::get_if<ComputationEvent>(&ev)) return &c->name;
    return nullptr;
}

const BitString* event_bits(const Event& ev) {
    if (const auto* m = std::get_if<MeasurementEvent>(&ev)) return &m->bits;
    if (const auto* c = std::get_if<ClassicalMessageEvent>(&ev)) return &c->bits;
    if (const auto* c = std::get_if<ComputationEvent>(&ev)) return &c->bits;
    return nullptr;
}

}  // namespace

CheckReport make_check_report(uint32_t checked, uint32_t mismatches, double threshold) {
    if (mismatches > checked) throw std::logic_error("mismatches exceed positions checked");
    CheckReport r;
    r.positions_checked = checked;
    r.mismatches = mismatches;
    r.error_rate = checked == 0 ? 0.0 : static_cast<double>(mismatches) / checked;
    r.passed = r.error_rate <= threshold;
    return r;
}

std::string Transcript::to_json() const {
    Json j{
        {"schema", "qpc-transcript-v1"},
        {"session_id", session_id},
        {"protocol", std::string(to_string(protocol))},
        {"n_bits", n_bits},
        {"x_hex", BitString::of(x, n_bits).to_hex()},
        {"y_hex", BitString::of(y, n_bits).to_hex()},
        {"trial", trial},
        {"config", config_json(config)},
    };
    Json events_json = Json::array();
    for (const Event& e : events) events_json.push_back(std::visit(EventToJson{}, e));
    j["events"] = std::move(events_json);
    Json eve = Json::array();
    for (const EveLogEntry& e : eve_log) {
        eve.push_back(Json{{"channel", e.channel},
                           {"position", e.position},
                           {"qubit_id", e.qubit_id},
                           {"basis", std::string(1, e.basis)},
                           {"outcome", e.outcome}});
    }
    j["eve_log"] = std::move(eve);
    j["result"] = std::string(to_string(result));
    return j.dump(2) + "\n";
}

std::optional<BitString> Transcript::named_bits(std::string_view name) const {
    for (const Event& ev : events) {
        const std::string* n = event_name(ev);
        if (n != nullptr && *n == name) return *event_bits(ev);
    }
    return std::nullopt;
}

uint32_t Transcript::named_count(std::string_view name) const {
    uint32_t count = 0;
    for (const Event& ev : events) {
        const std::string* n = event_name(ev);
        if (n != nullptr && *n == name) ++count;
    }
    return count;
}

bool Transcript::any_check_failed() const {
    for (const Event& ev : events) {
        if (const auto* c = std::get_if<CheckEvent>(&ev)) {
            if (!c->report.passed) return true;
        }
    }
    return false;
}

}  // namespace qpc
