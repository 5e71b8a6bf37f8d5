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

#include <cmath>

#include "qpc/channel.hpp"
#include "qpc/protocol_ghz.hpp"

using namespace qpc;

namespace {

bool within_3_sigma(uint64_t hits, uint64_t n, double p) {
    const double phat = static_cast<double>(hits) / static_cast<double>(n);
    return std::abs(phat - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace

TEST_CASE("xor algebra oracle: verdict bits equal x^y on every key branch") {
    // Independent of the simulator: TP's corrected outcome is
    // t = K_A ^ K_B ^ C (GHZ X-parity plus the sigma_z flips), so for every
    // key branch t must reduce to x ^ y. Exhaustive at N = 3.
    const uint32_t n = 3;
    for (uint64_t x = 0; x < 8; ++x) {
        for (uint64_t y = 0; y < 8; ++y) {
            for (uint64_t ka = 0; ka < 8; ++ka) {
                for (uint64_t kb = 0; kb < 8; ++kb) {
                    const uint64_t c = x ^ ka ^ y ^ kb;
                    const uint64_t t = ka ^ kb ^ c;
                    CHECK(t == (x ^ y));
                    CHECK(((t == 0) == (x == y)));
                }
            }
        }
    }
    (void)n;
}

TEST_CASE("ghz_encrypt_combine") {
    const BitString x = BitString::of(0b101, 3);
    CHECK(ghz_encrypt_combine(x, BitString::zeros(3), x, BitString::zeros(3)) ==
          BitString::zeros(3));

    // x=101, K_A=110, y=001, K_B=011 -> C=001 (bit strings written MSB first).
    const BitString c = ghz_encrypt_combine(BitString::of(0b101, 3), BitString::of(0b110, 3),
                                            BitString::of(0b001, 3), BitString::of(0b011, 3));
    CHECK(c == BitString::of(0b001, 3));

    // Symmetric under swapping the (input, key) pairs.
    CHECK(ghz_encrypt_combine(BitString::of(0b001, 3), BitString::of(0b011, 3),
                              BitString::of(0b101, 3), BitString::of(0b110, 3)) == c);

    CHECK_THROWS_AS(
        (void)ghz_encrypt_combine(BitString::zeros(2), BitString::zeros(3), BitString::zeros(3),
                                  BitString::zeros(3)),
        std::invalid_argument);
}

TEST_CASE("ghz_tp_verdict against the quantum path, exhaustively at N=2") {
    for (uint64_t x = 0; x < 4; ++x) {
        for (uint64_t y = 0; y < 4; ++y) {
            for (uint64_t seed = 0; seed < 3; ++seed) {
                QubitStore store;
                Rng rng(derive_seed(seed, x * 4 + y));
                std::vector<QubitId> alice, bob, tp;
                for (int i = 0; i < 2; ++i) {
                    const auto ids = store.add_state(prepare_ghz3());
                    alice.push_back(ids[0]);
                    bob.push_back(ids[1]);
                    tp.push_back(ids[2]);
                }
                const BitString ka = measure_sequence_x(store, alice, rng);
                const BitString kb = measure_sequence_x(store, bob, rng);
                const BitString cipher =
                    ghz_encrypt_combine(BitString::of(x, 2), ka, BitString::of(y, 2), kb);
                BitString outcomes;
                const SessionResult verdict = ghz_tp_verdict(store, cipher, tp, rng, &outcomes);
                CHECK(outcomes == BitString::of(x ^ y, 2));
                CHECK((verdict == SessionResult::Equal) == (x == y));
            }
        }
    }
}

TEST_CASE("ghz_tp_verdict rejects mismatched lengths") {
    QubitStore store;
    Rng rng(1);
    CHECK_THROWS_AS((void)ghz_tp_verdict(store, BitString::zeros(2), {}, rng),
                    std::invalid_argument);
}

TEST_CASE("empty sequence extracts an empty key") {
    QubitStore store;
    Rng rng(1);
    CHECK(measure_sequence_x(store, {}, rng).len == 0);
}

TEST_CASE("end-to-end: verdict equals input equality, exhaustive N<=3") {
    SessionConfig config;
    config.seed = 7;
    config.decoys_per_channel = 2;
    for (uint32_t n = 1; n <= 3; ++n) {
        for (uint64_t x = 0; x < (1u << n); ++x) {
            for (uint64_t y = 0; y < (1u << n); ++y) {
                const Transcript t =
                    run_session(Protocol::Ghz, ComparisonInput{x, y, n}, config, x * 100 + y);
                CHECK((t.result == SessionResult::Equal) == (x == y));
            }
        }
    }
}

TEST_CASE("per-round invariants: cipher composition and per-bit soundness") {
    SessionConfig config;
    config.seed = 99;
    for (uint64_t trial = 0; trial < 50; ++trial) {
        Rng input_rng(trial);
        const uint64_t x = input_rng.next_below(16);
        const uint64_t y = input_rng.next_below(16);
        const Transcript t = run_session(Protocol::Ghz, ComparisonInput{x, y, 4}, config, trial);
        REQUIRE(t.result != SessionResult::Aborted);
        for (const GhzRound& round : ghz_rounds(t)) {
            const int xi = static_cast<int>((x >> round.index) & 1);
            const int yi = static_cast<int>((y >> round.index) & 1);
            CHECK(round.cipher == (xi ^ round.key_a ^ yi ^ round.key_b));
            CHECK(round.tp_outcome == (xi ^ yi));
        }
    }
}

TEST_CASE("keys are marginally uniform and independent of the inputs") {
    SessionConfig config;
    config.seed = 1234;
    config.decoys_per_channel = 0;
    const uint32_t n_bits = 4;
    uint64_t ones = 0, trials = 2500;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        const Transcript t =
            run_session(Protocol::Ghz, ComparisonInput{0b1010, 0b1010, n_bits}, config, trial);
        const auto ka = t.named_bits("K_A");
        REQUIRE(ka.has_value());
        ones += ka->count_ones();
    }
    CHECK(within_3_sigma(ones, trials * n_bits, 0.5));
}

TEST_CASE("transcript structure: sequence lengths and named values") {
    SessionConfig config;
    config.seed = 5;
    config.decoys_per_channel = 8;
    const Transcript t = run_session(Protocol::Ghz, ComparisonInput{5, 3, 3}, config, 0);

    // N=3 payload plus 8 decoys on each channel.
    int transfers = 0;
    for (const Event& ev : t.events) {
        if (const auto* q = std::get_if<QubitTransferEvent>(&ev)) {
            CHECK(q->qubit_ids.size() == 11);
            ++transfers;
        }
    }
    CHECK(transfers == 2);

    for (const char* name : {"K_A", "K_B", "C", "C_A", "tp_outcome"}) {
        INFO(name);
        CHECK(t.named_count(name) == 1);
    }
    const BitString expected_c =
        BitString::of(5 ^ 3, 3) ^ *t.named_bits("K_A") ^ *t.named_bits("K_B");
    CHECK(*t.named_bits("C") == expected_c);
}

TEST_CASE("single attacked channel: the other check stays clean") {
    SessionConfig config;
    config.seed = 31;
    config.decoys_per_channel = 32;
    config.attack.kind = AttackKind::InterceptResend;
    config.attack.basis = BasisStrategy::UniformRandom;
    config.attack.target_channels = {"tp->bob"};

    const Transcript t = run_session(Protocol::Ghz, ComparisonInput{1, 2, 2}, config, 0);
    REQUIRE(t.result == SessionResult::Aborted);  // 32 decoys: survival (3/4)^32
    for (const Event& ev : t.events) {
        if (const auto* c = std::get_if<CheckEvent>(&ev)) {
            if (c->channel == "tp->alice") CHECK(c->report.passed);
            if (c->channel == "tp->bob") CHECK_FALSE(c->report.passed);
        }
    }
    CHECK(t.named_count("K_A") == 0);
    CHECK(t.named_count("C") == 0);
}
