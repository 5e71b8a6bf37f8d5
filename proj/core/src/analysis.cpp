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

#include "qpc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "json_util.hpp"
#include "qpc/channel.hpp"
#include "qpc/protocol_swap.hpp"
#include "qpc/session.hpp"
#include "qpc/stats.hpp"

namespace qpc {

namespace {

using detail::Json;

std::string_view verdict_token(SessionResult r) {
    switch (r) {
        case SessionResult::Equal: return "EQUAL";
        case SessionResult::NotEqual: return "NOT_EQUAL";
        case SessionResult::Aborted: return "ABORTED";
    }
    return "?";
}

uint32_t attacked_channel_count(Protocol p, const AttackConfig& attack) {
    if (attack.kind == AttackKind::None) return 0;
    uint32_t k = 0;
    for (const std::string& name : protocol_channels(p)) {
        if (attack.targets(name)) ++k;
    }
    return k;
}

/// Splits [0, total) into `jobs` chunks and runs fn(worker, lo, hi) on each.
template <typename Fn>
void parallel_chunks(uint32_t total, uint32_t jobs, Fn fn) {
    jobs = std::max<uint32_t>(1, std::min(jobs, total == 0 ? 1 : total));
    if (jobs == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    const uint32_t chunk = (total + jobs - 1) / jobs;
    for (uint32_t w = 0; w < jobs; ++w) {
        const uint32_t lo = w * chunk;
        const uint32_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    }
    for (std::thread& t : threads) t.join();
}

/// Payload qubit ids of the first transfer on `channel`, decoys excluded.
std::vector<uint32_t> payload_ids(const Transcript& t, std::string_view channel) {
    const QubitTransferEvent* transfer = nullptr;
    const CheckEvent* check = nullptr;
    for (const Event& ev : t.events) {
        if (const auto* q = std::get_if<QubitTransferEvent>(&ev)) {
            if (transfer == nullptr && q->channel == channel) transfer = q;
        }
        if (const auto* c = std::get_if<CheckEvent>(&ev)) {
            if (check == nullptr && c->channel == channel) check = c;
        }
    }
    if (transfer == nullptr) return {};
    std::vector<bool> is_decoy(transfer->qubit_ids.size(), false);
    if (check != nullptr) {
        for (uint32_t pos : check->positions) {
            if (pos < is_decoy.size()) is_decoy[pos] = true;
        }
    }
    std::vector<uint32_t> out;
    for (size_t i = 0; i < transfer->qubit_ids.size(); ++i) {
        if (!is_decoy[i]) out.push_back(transfer->qubit_ids[i]);
    }
    return out;
}

}  // namespace

double per_check_detection_rate(Protocol p) {
    // Intercept-resend flips half of the wrong-basis decoys; half of the
    // decoys are in the wrong basis, so 1/4 per decoy. A swap check pair
    // fails its |phi+> verification with probability 1/2 once either half
    // was measured in any fixed basis.
    return p == Protocol::Swap ? 0.5 : 0.25;
}

double analytic_abort_rate(Protocol p, const SessionConfig& config) {
    const uint32_t k = attacked_channel_count(p, config.attack);
    if (k == 0) return 0.0;
    const double survive = 1.0 - per_check_detection_rate(p);
    return 1.0 - std::pow(survive, static_cast<double>(config.decoys_per_channel) *
                                       static_cast<double>(k));
}

std::optional<BitString> recover_xor_from_tp_view(const Transcript& t) {
    switch (t.protocol) {
        case Protocol::Ghz:
            return t.named_bits("tp_outcome");
        case Protocol::Chi: {
            const auto r = t.named_bits("R");
            const auto r_t = t.named_bits("R_t");
            if (!r || !r_t) return std::nullopt;
            return *r ^ *r_t;
        }
        case Protocol::Swap: {
            const auto r_j = t.named_bits("R_j");
            const auto r_c = t.named_bits("R_C");
            if (!r_j || !r_c) return std::nullopt;
            return *r_j ^ *r_c;
        }
    }
    return std::nullopt;
}

std::vector<EveGuess> eve_guess_x(const Transcript& t) {
    if (t.protocol == Protocol::Swap) return {};
    const std::string_view mask_name = t.protocol == Protocol::Ghz ? "C_A" : "R_a";
    const auto mask = t.named_bits(mask_name);
    if (!mask) return {};

    std::unordered_map<uint32_t, int> intercepted;
    for (const EveLogEntry& e : t.eve_log) {
        if (e.channel == "tp->alice") intercepted[e.qubit_id] = e.outcome;
    }
    if (intercepted.empty()) return {};

    const std::vector<uint32_t> payload = payload_ids(t, "tp->alice");
    std::vector<EveGuess> guesses;
    for (uint32_t i = 0; i < payload.size() && i < mask->len; ++i) {
        const auto it = intercepted.find(payload[i]);
        if (it != intercepted.end()) {
            guesses.push_back(EveGuess{i, mask->bit(i) ^ it->second});
        }
    }
    return guesses;
}

LeakageReport detection_stats(Protocol protocol, uint32_t n_bits, const SessionConfig& config,
                              uint32_t trials, uint32_t jobs) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    ComparisonInput{0, 0, n_bits}.validate();

    struct Tally {
        uint32_t aborted = 0;
        uint32_t xor_checked = 0;
        uint32_t xor_matches = 0;
        EveTally eve_completed;
        EveTally eve_aborted;
    };
    std::vector<Tally> tallies(std::max<uint32_t>(1, jobs));

    const uint64_t input_root = derive_seed(config.seed, hash_tag("inputs"));
    const uint64_t width = uint64_t{1} << n_bits;

    parallel_chunks(trials, jobs, [&](uint32_t worker, uint32_t lo, uint32_t hi) {
        Tally& tally = tallies[worker];
        for (uint32_t trial = lo; trial < hi; ++trial) {
            Rng input_rng(derive_seed(input_root, trial));
            ComparisonInput input{input_rng.next_below(width), input_rng.next_below(width),
                                  n_bits};
            const Transcript t = run_session(protocol, input, config, trial);

            const bool completed = t.result != SessionResult::Aborted;
            if (!completed) ++tally.aborted;

            if (completed) {
                const auto recovered = recover_xor_from_tp_view(t);
                if (recovered) {
                    ++tally.xor_checked;
                    const BitString truth =
                        BitString::of(input.x ^ input.y, n_bits).zero_extended(recovered->len);
                    if (*recovered == truth) ++tally.xor_matches;
                }
            }

            EveTally& eve = completed ? tally.eve_completed : tally.eve_aborted;
            for (const EveGuess& g : eve_guess_x(t)) {
                ++eve.bits;
                if (g.guess == static_cast<int>((input.x >> g.bit_index) & 1)) ++eve.correct;
            }
        }
    });

    LeakageReport report;
    report.protocol = protocol;
    report.n_bits = n_bits;
    report.trials = trials;
    report.config = config;
    uint32_t xor_checked = 0, xor_matches = 0;
    for (const Tally& tally : tallies) {
        report.aborted += tally.aborted;
        xor_checked += tally.xor_checked;
        xor_matches += tally.xor_matches;
        report.eve_completed.bits += tally.eve_completed.bits;
        report.eve_completed.correct += tally.eve_completed.correct;
        report.eve_aborted.bits += tally.eve_aborted.bits;
        report.eve_aborted.correct += tally.eve_aborted.correct;
    }
    report.abort_rate = static_cast<double>(report.aborted) / trials;
    report.analytic_abort_rate = analytic_abort_rate(protocol, config);
    report.xor_checked = xor_checked;
    report.tp_recoverable_xor = xor_checked > 0 && xor_matches == xor_checked;
    return report;
}

std::string LeakageReport::to_json() const {
    Json eve;
    auto tally_json = [](const EveTally& t) {
        Json j{{"bits", t.bits}};
        const auto acc = t.accuracy();
        j["accuracy"] = acc ? Json(*acc) : Json(nullptr);
        return j;
    };
    const bool has_estimator =
        config.attack.kind != AttackKind::None && protocol != Protocol::Swap;
    Json j{
        {"schema", "qpc-leakage-v1"},
        {"protocol", std::string(to_string(protocol))},
        {"n_bits", n_bits},
        {"trials", trials},
        {"config", detail::config_json(config)},
        {"aborted", aborted},
        {"abort_rate", abort_rate},
        {"analytic_abort_rate", analytic_abort_rate},
        {"tp_recoverable_xor", tp_recoverable_xor},
        {"xor_checked", xor_checked},
        {"eve", has_estimator ? Json{{"completed", tally_json(eve_completed)},
                                     {"aborted", tally_json(eve_aborted)}}
                              : Json(nullptr)},
    };
    return j.dump(2) + "\n";
}

TpViewSummary tp_view_analysis(const std::vector<Transcript>& transcripts) {
    if (transcripts.empty()) throw std::invalid_argument("no transcripts to analyze");

    std::map<Protocol, std::vector<const Transcript*>> by_protocol;
    for (const Transcript& t : transcripts) by_protocol[t.protocol].push_back(&t);

    TpViewSummary summary;
    for (const auto& [protocol, batch] : by_protocol) {
        TpViewProtocolSummary s;
        s.protocol = protocol;
        s.sessions = static_cast<uint32_t>(batch.size());

        std::vector<uint64_t> binary_counts(2, 0);
        std::vector<uint64_t> code_counts(4, 0);
        uint32_t xor_matches = 0;
        for (const Transcript* t : batch) {
            if (t->result == SessionResult::Aborted) continue;
            ++s.completed;
            const auto recovered = recover_xor_from_tp_view(*t);
            if (recovered) {
                ++s.xor_checked;
                const BitString truth =
                    BitString::of(t->x ^ t->y, t->n_bits).zero_extended(recovered->len);
                if (*recovered == truth) ++xor_matches;
            }
            if (protocol == Protocol::Ghz) {
                if (const auto k = t->named_bits("K_A")) {
                    for (uint32_t i = 0; i < k->len; ++i) ++binary_counts[k->bit(i)];
                }
            } else if (protocol == Protocol::Chi) {
                if (const auto r = t->named_bits("R")) {
                    for (uint32_t i = 0; i < r->len; ++i) ++binary_counts[r->bit(i)];
                }
            } else {
                if (const auto codes = t->named_bits("R_A")) {
                    for (uint32_t j = 0; j < codes->len / 2; ++j) {
                        ++code_counts[swap_chunk(codes->value, j)];
                    }
                }
            }
        }
        s.xor_deterministic = s.xor_checked > 0 && xor_matches == s.xor_checked;

        auto push_stat = [&s](std::string label, std::vector<uint64_t> counts) {
            uint64_t n = 0;
            for (uint64_t c : counts) n += c;
            if (n == 0) return;
            UniformityStat stat;
            stat.label = std::move(label);
            stat.samples = n;
            stat.chi2 = chi_square_uniform(counts);
            stat.df = static_cast<uint32_t>(counts.size() - 1);
            stat.p_value = chi_square_p_value(stat.chi2, stat.df);
            if (counts.size() == 2) {
                const double phat = static_cast<double>(counts[1]) / static_cast<double>(n);
                stat.z = (phat - 0.5) / binomial_sigma(0.5, n);
            }
            stat.counts = std::move(counts);
            s.stats.push_back(std::move(stat));
        };
        if (protocol == Protocol::Ghz) {
            push_stat("K_A bit marginal", binary_counts);
        } else if (protocol == Protocol::Chi) {
            push_stat("(R, R_t) fiber (R bit marginal at fixed xor)", binary_counts);
        } else {
            push_stat("R_A Bell-code distribution", code_counts);
        }
        summary.protocols.push_back(std::move(s));
    }
    return summary;
}

std::string TpViewSummary::to_json() const {
    Json arr = Json::array();
    for (const TpViewProtocolSummary& s : protocols) {
        Json stats = Json::array();
        for (const UniformityStat& st : s.stats) {
            Json j{{"label", st.label},
                   {"samples", st.samples},
                   {"counts", st.counts},
                   {"chi2", st.chi2},
                   {"df", st.df},
                   {"p_value", st.p_value}};
            if (st.df == 1) j["z"] = st.z;
            stats.push_back(std::move(j));
        }
        arr.push_back(Json{{"protocol", std::string(to_string(s.protocol))},
                           {"sessions", s.sessions},
                           {"completed", s.completed},
                           {"xor_deterministic", s.xor_deterministic},
                           {"xor_checked", s.xor_checked},
                           {"uniformity", std::move(stats)}});
    }
    Json j{{"schema", "qpc-tp-view-v1"}, {"protocols", std::move(arr)}};
    return j.dump(2) + "\n";
}

SweepResult run_sweep(Protocol protocol, uint32_t n_bits, uint32_t num_seeds, uint64_t base_seed,
                      uint32_t jobs) {
    if (n_bits < 1 || n_bits > 6) {
        throw std::invalid_argument("sweep n_bits must be in [1, 6]");
    }
    if (num_seeds < 1) throw std::invalid_argument("num_seeds must be >= 1");

    const uint64_t width = uint64_t{1} << n_bits;
    const uint32_t total = static_cast<uint32_t>(width * width * num_seeds);

    SweepResult result;
    result.protocol = protocol;
    result.n_bits = n_bits;
    result.num_seeds = num_seeds;
    result.base_seed = base_seed;
    result.rows.resize(total);

    SessionConfig config;
    config.seed = base_seed;
    config.decoys_per_channel = 2;

    parallel_chunks(total, jobs, [&](uint32_t, uint32_t lo, uint32_t hi) {
        for (uint32_t idx = lo; idx < hi; ++idx) {
            const uint32_t seed_index = idx % num_seeds;
            const uint64_t pair = idx / num_seeds;
            const uint64_t x = pair / width;
            const uint64_t y = pair % width;
            const Transcript t =
                run_session(protocol, ComparisonInput{x, y, n_bits}, config, idx);
            result.rows[idx] = SweepRow{x, y, seed_index, t.result};
        }
    });

    for (const SweepRow& row : result.rows) {
        const bool should_equal = row.x == row.y;
        const bool is_equal = row.verdict == SessionResult::Equal;
        if (row.verdict == SessionResult::Aborted || should_equal != is_equal) {
            ++result.mismatches;
        }
    }
    return result;
}

std::string SweepResult::to_csv() const {
    std::string out = "protocol,n_bits,x,y,seed_index,verdict\n";
    for (const SweepRow& row : rows) {
        out += std::string(to_string(protocol)) + "," + std::to_string(n_bits) + "," +
               std::to_string(row.x) + "," + std::to_string(row.y) + "," +
               std::to_string(row.seed_index) + "," + std::string(verdict_token(row.verdict)) +
               "\n";
    }
    out += "# rows=" + std::to_string(rows.size()) + " mismatches=" + std::to_string(mismatches) +
           "\n";
    return out;
}

std::string SweepResult::to_json() const {
    Json rows_json = Json::array();
    for (const SweepRow& row : rows) {
        rows_json.push_back(Json{{"x", row.x},
                                 {"y", row.y},
                                 {"seed_index", row.seed_index},
                                 {"verdict", std::string(verdict_token(row.verdict))}});
    }
    Json j{{"schema", "qpc-sweep-v1"},
           {"protocol", std::string(to_string(protocol))},
           {"n_bits", n_bits},
           {"num_seeds", num_seeds},
           {"base_seed_hex", detail::hex64(base_seed)},
           {"rows", std::move(rows_json)},
           {"mismatches", mismatches}};
    return j.dump(2) + "\n";
}

}  // namespace qpc
