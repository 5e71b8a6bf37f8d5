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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "qpc/channel.hpp"
#include "qpc/protocol_chi.hpp"

using namespace qpc;

namespace {

bool within_3_sigma(uint64_t hits, uint64_t n, double p) {
    const double phat = static_cast<double>(hits) / static_cast<double>(n);
    return std::abs(phat - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

// The chi state with the sign of the |01>|psi-> term flipped. The printed
// minus sign is a relative phase the protocol's statistics cannot see; this
// variant drives the sign-insensitivity check.
StateVector chi_variant_plus_sign() {
    const double c = 0.5 * kInvSqrt2;
    std::vector<Complex> amps(16, Complex{0, 0});
    amps[0b0000] = c;
    amps[0b0011] = c;
    amps[0b1100] = c;
    amps[0b1111] = -c;
    amps[0b0101] = c;   // flipped
    amps[0b0110] = -c;  // flipped
    amps[0b1001] = c;
    amps[0b1010] = c;
    return StateVector::from_amplitudes(4, std::move(amps));
}

}  // namespace

TEST_CASE("round identity: R_a ^ R_b ^ R_t = x ^ y in every run") {
    SessionConfig config;
    config.seed = 17;
    config.decoys_per_channel = 2;
    for (uint64_t trial = 0; trial < 60; ++trial) {
        Rng input_rng(trial);
        const uint64_t x = input_rng.next_below(16);
        const uint64_t y = input_rng.next_below(16);
        const Transcript t = run_session(Protocol::Chi, ComparisonInput{x, y, 4}, config, trial);
        REQUIRE(t.result != SessionResult::Aborted);
        for (const ChiRound& round : chi_rounds(t)) {
            const int xi = static_cast<int>((x >> round.index) & 1);
            const int yi = static_cast<int>((y >> round.index) & 1);
            CHECK((round.r_a ^ round.r_b ^ round.r_t) == (xi ^ yi));
            CHECK(round.r == (round.r_a ^ round.r_b));
        }
    }
}

TEST_CASE("end-to-end: verdict equals input equality, exhaustive N<=3") {
    SessionConfig config;
    config.seed = 23;
    config.decoys_per_channel = 2;
    for (uint32_t n = 1; n <= 3; ++n) {
        for (uint64_t x = 0; x < (1u << n); ++x) {
            for (uint64_t y = 0; y < (1u << n); ++y) {
                const Transcript t =
                    run_session(Protocol::Chi, ComparisonInput{x, y, n}, config, x * 100 + y);
                CHECK((t.result == SessionResult::Equal) == (x == y));
            }
        }
    }
}

TEST_CASE("encoding flips the readout relative to the shared Z value") {
    Rng rng(31);
    for (int secret_a : {0, 1}) {
        for (int secret_b : {0, 1}) {
            for (int rep = 0; rep < 200; ++rep) {
                QubitStore store;
                const auto ids = store.add_state(prepare_chi00());
                const int ra = chi_encode_and_measure(store, ids[0], secret_a, rng);
                const int rb = chi_encode_and_measure(store, ids[1], secret_b, rng);
                const BellKind kind = store.measure_bell(ids[2], ids[3], rng);
                // Undoing the encodings must reproduce the chi correlation.
                const int a = ra ^ secret_a;
                const int b = rb ^ secret_b;
                CHECK(((a ^ b) == 0) == is_phi(kind));
            }
        }
    }
}

TEST_CASE("readout marginal is uniform") {
    Rng rng(37);
    uint64_t ones = 0;
    const int n = 10000;
    for (int rep = 0; rep < n; ++rep) {
        QubitStore store;
        const auto ids = store.add_state(prepare_chi00());
        ones += static_cast<uint64_t>(chi_encode_and_measure(store, ids[0], 0, rng));
    }
    CHECK(within_3_sigma(ones, n, 0.5));
}

TEST_CASE("chi_tp_verdict: per-bit xor and error paths") {
    // x=0b01, y=0b11 differ exactly at bit 1.
    SessionConfig config;
    config.seed = 41;
    const Transcript t = run_session(Protocol::Chi, ComparisonInput{0b01, 0b11, 2}, config, 0);
    REQUIRE(t.result == SessionResult::NotEqual);
    const BitString r_xor_rt = *t.named_bits("R") ^ *t.named_bits("R_t");
    CHECK(r_xor_rt == BitString::of(0b10, 2));

    QubitStore store;
    Rng rng(1);
    CHECK_THROWS_AS((void)chi_tp_verdict(store, BitString::zeros(2), {}, rng),
                    std::invalid_argument);
}

TEST_CASE("R_t splits evenly between phi-type and psi-type") {
    SessionConfig config;
    config.seed = 43;
    config.decoys_per_channel = 0;
    uint64_t psi = 0;
    const uint64_t trials = 2500, n_bits = 4;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        const Transcript t =
            run_session(Protocol::Chi, ComparisonInput{6, 6, n_bits}, config, trial);
        psi += t.named_bits("R_t")->count_ones();
    }
    CHECK(within_3_sigma(psi, trials * n_bits, 0.5));
}

TEST_CASE("the printed sign of the psi- term is invisible to the protocol") {
    Rng rng(47);
    std::array<std::array<uint64_t, 4>, 2> counts{};
    for (int variant = 0; variant < 2; ++variant) {
        for (int rep = 0; rep < 4000; ++rep) {
            QubitStore store;
            const auto ids = store.add_state(variant == 0 ? prepare_chi00()
                                                          : chi_variant_plus_sign());
            const int a = store.measure_z(ids[0], rng);
            const int b = store.measure_z(ids[1], rng);
            const BellKind kind = store.measure_bell(ids[2], ids[3], rng);
            CHECK(((a ^ b) == 0) == is_phi(kind));  // correlation identical
            ++counts[variant][bell_code(kind)];
        }
    }
    for (int variant = 0; variant < 2; ++variant) {
        for (int k = 0; k < 4; ++k) CHECK(within_3_sigma(counts[variant][k], 4000, 0.25));
    }
}

TEST_CASE("quantum cost is N chi states and named values appear once") {
    SessionConfig config;
    config.seed = 53;
    config.decoys_per_channel = 4;
    const Transcript t = run_session(Protocol::Chi, ComparisonInput{9, 9, 4}, config, 0);
    int transfers = 0;
    for (const Event& ev : t.events) {
        if (const auto* q = std::get_if<QubitTransferEvent>(&ev)) {
            CHECK(q->qubit_ids.size() == 8);  // N payload + 4 decoys
            ++transfers;
        }
    }
    CHECK(transfers == 2);
    for (const char* name : {"R_a", "R_b", "R", "R_t", "tp_codes"}) {
        INFO(name);
        CHECK(t.named_count(name) == 1);
    }
}

TEST_CASE("attack on one channel leaves the other check clean") {
    SessionConfig config;
    config.seed = 59;
    config.decoys_per_channel = 32;
    config.attack.kind = AttackKind::InterceptResend;
    config.attack.target_channels = {"tp->bob"};
    const Transcript t = run_session(Protocol::Chi, ComparisonInput{0, 1, 1}, config, 0);
    REQUIRE(t.result == SessionResult::Aborted);
    for (const Event& ev : t.events) {
        if (const auto* c = std::get_if<CheckEvent>(&ev)) {
            if (c->channel == "tp->alice") CHECK(c->report.passed);
            if (c->channel == "tp->bob") CHECK_FALSE(c->report.passed);
        }
    }
    CHECK(t.named_count("R_a") == 0);
}
