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
#include <set>

#include "qpc/channel.hpp"
#include "qpc/session.hpp"
#include "qpc/store.hpp"
#include "qpc/transcript.hpp"

using namespace qpc;

namespace {

bool within_3_sigma(uint64_t hits, uint64_t n, double p) {
    const double phat = static_cast<double>(hits) / static_cast<double>(n);
    return std::abs(phat - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

// Oracle for the decoy disturbance rate: intercept-resend measured in
// `eve_basis` against a decoy prepared in `prep_basis`, worked out with
// explicit 2-vector amplitudes. Wrong-basis interception flips the decoy's
// check outcome with probability exactly 1/2; matching bases never disturb.
double oracle_mismatch_probability(char prep_basis, int prep_bit, char eve_basis) {
    using V = std::array<double, 2>;  // all involved states are real
    auto state_of = [](char basis, int bit) -> V {
        if (basis == 'Z') return bit ? V{0, 1} : V{1, 0};
        const double h = std::sqrt(0.5);
        return bit ? V{h, -h} : V{h, h};
    };
    auto dot = [](const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1]; };
    const V decoy = state_of(prep_basis, prep_bit);
    double mismatch = 0.0;
    for (int eve_outcome = 0; eve_outcome < 2; ++eve_outcome) {
        const V eve_state = state_of(eve_basis, eve_outcome);
        const double p_eve = dot(decoy, eve_state) * dot(decoy, eve_state);
        const double p_keep = dot(eve_state, decoy) * dot(eve_state, decoy);
        mismatch += p_eve * (1.0 - p_keep);
    }
    return mismatch;
}

SessionContext make_ctx(const SessionConfig& config, Protocol p = Protocol::Ghz) {
    return SessionContext(p, ComparisonInput{1, 1, 2}, config, 0);
}

}  // namespace

TEST_CASE("rng reproducibility and uniformity") {
    Rng a(1234), b(1234);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(hash_tag("alice") != hash_tag("bob"));

    Rng r(99);
    std::array<uint64_t, 4> counts{0, 0, 0, 0};
    for (int i = 0; i < 40000; ++i) ++counts[r.next_below(4)];
    for (uint64_t c : counts) CHECK(within_3_sigma(c, 40000, 0.25));

    uint64_t ones = 0;
    for (int i = 0; i < 40000; ++i) ones += static_cast<uint64_t>(r.next_bit());
    CHECK(within_3_sigma(ones, 40000, 0.5));
}

TEST_CASE("bit strings") {
    const BitString b = BitString::of(0b101, 3);
    CHECK(b.bit(0) == 1);
    CHECK(b.bit(1) == 0);
    CHECK(b.bit(2) == 1);
    CHECK(b.to_binary() == "101");
    CHECK(b.to_hex() == "5");
    CHECK(BitString::from_hex("5", 3) == b);
    CHECK(BitString::of(5, 8).to_hex() == "05");
    CHECK((BitString::of(0b101, 3) ^ BitString::of(0b110, 3)) == BitString::of(0b011, 3));
    CHECK(BitString::of(3, 2).zero_extended(6) == BitString::of(3, 6));
    CHECK(BitString::zeros(0).to_hex() == "");
    CHECK(BitString::of(1, 1).count_ones() == 1);

    CHECK_THROWS_AS((void)BitString::of(8, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)(BitString::of(1, 1) ^ BitString::of(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)BitString::of(0, 65), std::invalid_argument);

    CHECK(parse_uint_literal("0x1f") == 31);
    CHECK(parse_uint_literal("0b101") == 5);
    CHECK(parse_uint_literal("42") == 42);
    CHECK(parse_uint_literal("0xffffffffffffffff") == UINT64_MAX);
    CHECK_FALSE(parse_uint_literal("0x1g").has_value());
    CHECK_FALSE(parse_uint_literal("12a").has_value());
    CHECK_FALSE(parse_uint_literal("").has_value());
    CHECK_FALSE(parse_uint_literal("0x10000000000000000").has_value());
}

TEST_CASE("qubit store: handles, collapse, and merging") {
    QubitStore store;
    Rng rng(3);

    const auto ghz = store.add_state(prepare_ghz3());
    CHECK(store.live_qubits() == 3);
    CHECK(store.group_size(ghz[0]) == 3);

    const int first = store.measure_z(ghz[0], rng);
    CHECK(store.live_qubits() == 2);
    CHECK_FALSE(store.contains(ghz[0]));
    CHECK(store.measure_z(ghz[1], rng) == first);
    CHECK(store.measure_z(ghz[2], rng) == first);
    CHECK(store.live_qubits() == 0);

    // Bell measurement across two separate registers merges them first.
    const auto p1 = store.add_state(prepare_bell(BellKind::PhiPlus));
    const auto p2 = store.add_state(prepare_bell(BellKind::PhiPlus));
    const BellKind k1 = store.measure_bell(p1[0], p2[0], rng);
    const BellKind k2 = store.measure_bell(p1[1], p2[1], rng);
    CHECK(k1 == k2);

    CHECK_THROWS_AS((void)store.measure_z(ghz[0], rng), std::out_of_range);
    CHECK_THROWS_AS((void)store.measure_bell(p1[0], p1[0], rng), std::invalid_argument);
}

TEST_CASE("store pauli and resend primitives") {
    QubitStore store;
    Rng rng(5);

    const QubitId zero = store.add_qubit(StateVector(1));
    store.apply_pauli(zero, PauliOp::X);
    CHECK(store.measure_z(zero, rng) == 1);

    // Z-basis resend of a Z eigenstate is invisible.
    for (int rep = 0; rep < 32; ++rep) {
        const QubitId q = store.add_qubit(decoy_state_vector(DecoyState::Z1));
        CHECK(store.collapse_resend(q, 'Z', rng) == 1);
        CHECK(store.contains(q));
        CHECK(store.measure_z(q, rng) == 1);
    }

    // Z-basis resend of |-> randomizes the X readout.
    uint64_t flips = 0;
    const int n = 10000;
    for (int rep = 0; rep < n; ++rep) {
        const QubitId q = store.add_qubit(decoy_state_vector(DecoyState::Xminus));
        store.collapse_resend(q, 'Z', rng);
        flips += static_cast<uint64_t>(store.measure_x(q, rng) != 1);
    }
    CHECK(within_3_sigma(flips, n, 0.5));

    // Resending breaks entanglement: the partner ends up in a product state.
    const auto pair = store.add_state(prepare_bell(BellKind::PhiPlus));
    const int sent = store.collapse_resend(pair[1], 'Z', rng);
    CHECK(store.group_size(pair[0]) == 1);
    CHECK(store.measure_z(pair[0], rng) == sent);
    CHECK(store.measure_z(pair[1], rng) == sent);
}

TEST_CASE("decoy insertion structure") {
    SessionConfig config;
    config.decoys_per_channel = 4;
    SessionContext ctx = make_ctx(config);
    const Channel ch = make_channel(Party::TP, Party::Alice);

    std::vector<QubitId> payload;
    for (int i = 0; i < 4; ++i) payload.push_back(ctx.store().add_qubit(StateVector(1)));

    const auto [sequence, records] = insert_decoys(ctx, ch, payload);
    CHECK(sequence.size() == 8);
    CHECK(records.size() == 4);
    std::set<uint32_t> positions;
    for (const DecoyRecord& r : records) positions.insert(r.position);
    CHECK(positions.size() == 4);
    for (const DecoyRecord& r : records) {
        CHECK(r.position < 8);
        CHECK(sequence[r.position] == r.id);
    }
    uint32_t prev = 0;
    bool first = true;
    for (const DecoyRecord& r : records) {
        if (!first) CHECK(r.position > prev);
        prev = r.position;
        first = false;
    }
    // Payload order survives interleaving.
    std::vector<QubitId> payload_back;
    for (QubitId id : sequence) {
        bool is_decoy = false;
        for (const DecoyRecord& r : records) is_decoy |= r.id == id;
        if (!is_decoy) payload_back.push_back(id);
    }
    CHECK(payload_back == payload);
}

TEST_CASE("decoy d=0 leaves the sequence unchanged") {
    SessionConfig config;
    config.decoys_per_channel = 0;
    SessionContext ctx = make_ctx(config);
    std::vector<QubitId> payload{ctx.store().add_qubit(StateVector(1))};
    const auto [sequence, records] = insert_decoys(ctx, make_channel(Party::TP, Party::Alice), payload);
    CHECK(sequence == payload);
    CHECK(records.empty());
}

TEST_CASE("decoy variants are drawn uniformly") {
    SessionConfig config;
    config.decoys_per_channel = 4000;
    SessionContext ctx = make_ctx(config);
    const auto [sequence, records] =
        insert_decoys(ctx, make_channel(Party::TP, Party::Alice), {});
    std::array<uint64_t, 4> counts{0, 0, 0, 0};
    for (const DecoyRecord& r : records) ++counts[static_cast<int>(r.state)];
    for (uint64_t c : counts) CHECK(within_3_sigma(c, records.size(), 0.25));
}

TEST_CASE("ideal channel: delivery is exact and checks pass") {
    SessionConfig config;
    config.decoys_per_channel = 16;
    SessionContext ctx = make_ctx(config);
    const Channel ch = make_channel(Party::TP, Party::Alice);

    std::vector<QubitId> payload;
    for (int i = 0; i < 8; ++i) payload.push_back(ctx.store().add_qubit(decoy_state_vector(DecoyState::Xplus)));
    const GuardedDelivery d = send_with_decoy_check(ctx, ch, payload);
    CHECK(d.report.passed);
    CHECK(d.report.mismatches == 0);
    CHECK(d.report.positions_checked == 16);
    CHECK(d.report.error_rate == 0.0);
    CHECK(ctx.transcript().eve_log.empty());

    Rng rng(7);
    for (QubitId q : d.payload) CHECK(ctx.store().measure_x(q, rng) == 0);
}

TEST_CASE("intercept-resend disturbance matches the amplitude oracle") {
    // Frozen from oracle_mismatch_probability: same basis 0, crossed 1/2,
    // averaging to 1/4 per decoy for every strategy.
    for (char prep : {'Z', 'X'}) {
        for (int bit : {0, 1}) {
            CHECK(std::abs(oracle_mismatch_probability(prep, bit, prep == 'Z' ? 'Z' : 'X')) < 1e-12);
            CHECK(oracle_mismatch_probability(prep, bit, prep == 'Z' ? 'X' : 'Z') ==
                  doctest::Approx(0.5));
        }
    }

    for (BasisStrategy strategy :
         {BasisStrategy::AlwaysZ, BasisStrategy::AlwaysX, BasisStrategy::UniformRandom}) {
        SessionConfig config;
        config.seed = 17 + static_cast<uint64_t>(strategy);
        config.decoys_per_channel = 20000;
        config.check_threshold = 0.9;  // keep the report informative, not aborting
        config.attack.kind = AttackKind::InterceptResend;
        config.attack.basis = strategy;
        SessionContext ctx = make_ctx(config);
        const GuardedDelivery d =
            send_with_decoy_check(ctx, make_channel(Party::TP, Party::Alice), {});
        CHECK(ctx.transcript().eve_log.size() == 20000);
        CHECK(within_3_sigma(d.report.mismatches, 20000, 0.25));
    }
}

TEST_CASE("attack only disturbs targeted channels") {
    SessionConfig config;
    config.decoys_per_channel = 64;
    config.attack.kind = AttackKind::InterceptResend;
    config.attack.target_channels = {"tp->bob"};
    SessionContext ctx = make_ctx(config);
    const GuardedDelivery da = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Alice), {});
    CHECK(da.report.passed);
    CHECK(ctx.transcript().eve_log.empty());
    const GuardedDelivery db = send_with_decoy_check(ctx, make_channel(Party::TP, Party::Bob), {});
    CHECK(ctx.transcript().eve_log.size() == 64);
    CHECK_FALSE(db.report.passed);  // 64 decoys, detection odds 1 - (3/4)^64
}

TEST_CASE("epr check pairs verify phi+ and detect resends at rate 1/2") {
    {
        SessionConfig config;
        config.decoys_per_channel = 32;
        SessionContext ctx = make_ctx(config, Protocol::Swap);
        const GuardedDelivery d =
            send_with_epr_check(ctx, make_channel(Party::Alice, Party::TP), {});
        CHECK(d.report.passed);
        CHECK(d.report.mismatches == 0);
    }
    {
        SessionConfig config;
        config.seed = 23;
        config.decoys_per_channel = 20000;
        config.check_threshold = 0.9;
        config.attack.kind = AttackKind::InterceptResend;
        config.attack.basis = BasisStrategy::AlwaysZ;
        SessionContext ctx = make_ctx(config, Protocol::Swap);
        const GuardedDelivery d =
            send_with_epr_check(ctx, make_channel(Party::Alice, Party::TP), {});
        CHECK(within_3_sigma(d.report.mismatches, 20000, 0.5));
    }
}

TEST_CASE("check report arithmetic and malformed records") {
    const CheckReport empty = make_check_report(0, 0, 0.0);
    CHECK(empty.error_rate == 0.0);
    CHECK(empty.passed);

    const CheckReport failing = make_check_report(8, 2, 0.0);
    CHECK(failing.error_rate == doctest::Approx(0.25));
    CHECK_FALSE(failing.passed);
    CHECK(make_check_report(8, 2, 0.25).passed);
    CHECK_THROWS_AS((void)make_check_report(1, 2, 0.0), std::logic_error);

    SessionConfig config;
    SessionContext ctx = make_ctx(config);
    std::vector<DecoyRecord> bad{{5, DecoyState::Z0, ctx.store().add_qubit(StateVector(1))}};
    CHECK_THROWS_AS((void)run_decoy_check(ctx, make_channel(Party::TP, Party::Alice), bad, 3),
                    std::logic_error);
}

TEST_CASE("session config validation and warnings") {
    CHECK_THROWS_AS((void)make_ctx(SessionConfig{.check_threshold = 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)SessionContext(Protocol::Ghz, ComparisonInput{4, 0, 2}, SessionConfig{}, 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)SessionContext(Protocol::Ghz, ComparisonInput{0, 0, 0}, SessionConfig{}, 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)SessionContext(Protocol::Ghz, ComparisonInput{0, 0, 33}, SessionConfig{}, 0),
        std::invalid_argument);

    SessionConfig attack_no_decoys;
    attack_no_decoys.decoys_per_channel = 0;
    attack_no_decoys.attack.kind = AttackKind::InterceptResend;
    SessionContext ctx = make_ctx(attack_no_decoys);
    REQUIRE(ctx.transcript().events.size() == 1);
    CHECK(std::holds_alternative<WarningEvent>(ctx.transcript().events[0]));
}

TEST_CASE("transcripts replay byte-identically and abort iff a check failed") {
    const ComparisonInput input{5, 5, 3};
    SessionConfig config;
    config.seed = 424242;
    config.decoys_per_channel = 8;

    for (Protocol p : {Protocol::Ghz, Protocol::Chi, Protocol::Swap}) {
        const Transcript a = run_session(p, input, config, 3);
        const Transcript b = run_session(p, input, config, 3);
        CHECK(a.to_json() == b.to_json());
        CHECK((a.result == SessionResult::Aborted) == a.any_check_failed());
    }

    SessionConfig attacked = config;
    attacked.attack.kind = AttackKind::InterceptResend;
    int aborted = 0;
    for (uint64_t trial = 0; trial < 50; ++trial) {
        const Transcript t = run_session(Protocol::Ghz, input, attacked, trial);
        CHECK((t.result == SessionResult::Aborted) == t.any_check_failed());
        if (t.result == SessionResult::Aborted) {
            ++aborted;
            // Abort soundness: nothing derived from x or y was ever sent.
            CHECK(t.named_count("K_A") == 0);
            CHECK(t.named_count("C_A") == 0);
            CHECK(t.named_count("C") == 0);
        }
    }
    CHECK(aborted > 0);
}

TEST_CASE("transcript JSON carries the v1 schema fields") {
    const Transcript t = run_session(Protocol::Chi, ComparisonInput{2, 3, 2}, SessionConfig{}, 0);
    const std::string json = t.to_json();
    for (const char* needle :
         {"\"schema\": \"qpc-transcript-v1\"", "\"session_id\"", "\"protocol\": \"chi\"",
          "\"n_bits\": 2", "\"x_hex\": \"2\"", "\"y_hex\": \"3\"", "\"config\"", "\"events\"",
          "\"eve_log\"", "\"result\"", "\"qubit_transfer\"", "\"check\""}) {
        INFO(needle);
        CHECK(json.find(needle) != std::string::npos);
    }
    CHECK(t.named_count("R") == 1);
    CHECK(t.named_bits("R_t").has_value());
    CHECK_FALSE(t.named_bits("no_such_value").has_value());
}
