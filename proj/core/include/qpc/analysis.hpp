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

#ifndef QPC_ANALYSIS_HPP
#define QPC_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qpc/config.hpp"
#include "qpc/transcript.hpp"
#include "qpc/types.hpp"

namespace qpc {

// What the eavesdropper and the semi-honest TP can extract, measured over a
// batch of sessions. Aborted and completed runs are tallied separately;
// Eve's per-bit accuracy is absent when no estimator applies (no attack, no
// interceptions usable, or the swap protocol, where her view never contains
// a reconstruction of any input bit).
struct EveTally {
    uint64_t bits = 0;
    uint64_t correct = 0;
    std::optional<double> accuracy() const {
        if (bits == 0) return std::nullopt;
        return static_cast<double>(correct) / static_cast<double>(bits);
    }
};

struct LeakageReport {
    Protocol protocol = Protocol::Ghz;
    uint32_t n_bits = 0;
    uint32_t trials = 0;
    SessionConfig config;
    uint32_t aborted = 0;
    double abort_rate = 0.0;
    /// 1 - survival^d per attacked channel, zero-threshold model.
    double analytic_abort_rate = 0.0;
    /// True iff x ^ y was recomputed exactly from TP's view on every
    /// completed session (vacuously false when none completed).
    bool tp_recoverable_xor = false;
    uint32_t xor_checked = 0;
    EveTally eve_completed;
    EveTally eve_aborted;

    std::string to_json() const;
};

/// Per-decoy (ghz/chi) or per-check-pair (swap) detection probability.
double per_check_detection_rate(Protocol p);

/// Abort probability predicted for the attack in `config`, zero threshold.
double analytic_abort_rate(Protocol p, const SessionConfig& config);

// Runs `trials` sessions with inputs drawn uniformly per trial and
// aggregates abort statistics, TP-view XOR recoverability, and Eve's
// accuracy on x. Deterministic in (config.seed, trials); jobs > 1 fans
// trials out across threads without changing any tally.
LeakageReport detection_stats(Protocol protocol, uint32_t n_bits, const SessionConfig& config,
                              uint32_t trials, uint32_t jobs = 1);

/// x ^ y as recomputed purely from TP-visible transcript events, when the
/// session completed. Length n_bits (ghz/chi) or 2*ceil(n_bits/2) (swap).
std::optional<BitString> recover_xor_from_tp_view(const Transcript& t);

/// Eve's per-bit guesses of x, from her log plus public events (ghz/chi).
struct EveGuess {
    uint32_t bit_index;
    int guess;
};
std::vector<EveGuess> eve_guess_x(const Transcript& t);

struct UniformityStat {
    std::string label;
    uint64_t samples = 0;
    std::vector<uint64_t> counts;  // per-cell observation counts
    double chi2 = 0.0;
    uint32_t df = 0;
    double p_value = 1.0;
    /// For two-cell stats: (phat - 1/2) / binomial_sigma. 0 otherwise.
    double z = 0.0;
};

struct TpViewProtocolSummary {
    Protocol protocol = Protocol::Ghz;
    uint32_t sessions = 0;
    uint32_t completed = 0;
    bool xor_deterministic = false;
    uint32_t xor_checked = 0;
    std::vector<UniformityStat> stats;
};

struct TpViewSummary {
    std::vector<TpViewProtocolSummary> protocols;
    std::string to_json() const;
};

// Checks, per protocol present in the batch, that x ^ y is a deterministic
// function of TP's view, and reports uniformity statistics of the values TP
// sees at fixed x ^ y (chi-square p-values reported, never thresholded).
// Throws std::invalid_argument on an empty batch.
TpViewSummary tp_view_analysis(const std::vector<Transcript>& transcripts);

// Exhaustive (x, y) sweep at a small width, `num_seeds` sessions per pair.
// Rows are canonically ordered by (x, y, seed) no matter how many workers
// ran them; `mismatches` counts rows whose verdict differs from x == y.
struct SweepRow {
    uint64_t x;
    uint64_t y;
    uint32_t seed_index;
    SessionResult verdict;
};

struct SweepResult {
    Protocol protocol = Protocol::Ghz;
    uint32_t n_bits = 0;
    uint32_t num_seeds = 0;
    uint64_t base_seed = 0;
    std::vector<SweepRow> rows;
    uint32_t mismatches = 0;

    std::string to_csv() const;
    std::string to_json() const;
};

SweepResult run_sweep(Protocol protocol, uint32_t n_bits, uint32_t num_seeds, uint64_t base_seed,
                      uint32_t jobs = 1);

}  // namespace qpc

#endif
