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

// qpc: command-line front end for the private-comparison simulator.
//
//   qpc run          one session, JSON transcript, one-line verdict
//   qpc sweep        exhaustive (x, y) correctness sweep, CSV or JSON
//   qpc attack-stats Monte-Carlo eavesdropping statistics, JSON leakage report
//
// Exit codes: 0 for a completed comparison (either verdict), 2 when a session
// aborted on a failed eavesdropping check, 1 for usage or internal errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpc/analysis.hpp"
#include "qpc/bits.hpp"
#include "qpc/session.hpp"
#include "qpc/types.hpp"

namespace {

struct RunSpec {
    std::string protocol = "ghz";
    std::string x_text = "0";
    std::string y_text = "0";
    uint32_t bits = 4;
    uint64_t seed = 0;
    uint64_t trial = 0;
    uint32_t trials = 5;
    uint32_t decoys = 8;
    double threshold = 0.0;
    std::string attack = "none";
    std::string attack_basis = "random";
    std::string attack_channels = "all";
    uint32_t jobs = 1;
    std::string out;
    std::string format;
};

qpc::Protocol parse_protocol_or_throw(const std::string& text) {
    const auto p = qpc::parse_protocol(text);
    if (!p) throw CLI::ValidationError("--protocol", "must be one of ghz, chi, swap");
    return *p;
}

uint64_t parse_value_or_throw(const std::string& text, const char* flag) {
    const auto v = qpc::parse_uint_literal(text);
    if (!v) throw CLI::ValidationError(flag, "expected a decimal, 0x hex, or 0b binary literal");
    return *v;
}

qpc::AttackConfig parse_attack(const RunSpec& spec) {
    qpc::AttackConfig attack;
    if (spec.attack == "none") {
        attack.kind = qpc::AttackKind::None;
        return attack;
    }
    if (spec.attack != "intercept-resend") {
        throw CLI::ValidationError("--attack", "must be none or intercept-resend");
    }
    attack.kind = qpc::AttackKind::InterceptResend;
    if (spec.attack_basis == "z") {
        attack.basis = qpc::BasisStrategy::AlwaysZ;
    } else if (spec.attack_basis == "x") {
        attack.basis = qpc::BasisStrategy::AlwaysX;
    } else if (spec.attack_basis == "random") {
        attack.basis = qpc::BasisStrategy::UniformRandom;
    } else {
        throw CLI::ValidationError("--attack-basis", "must be z, x, or random");
    }
    if (spec.attack_channels != "all" && !spec.attack_channels.empty()) {
        std::stringstream ss(spec.attack_channels);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) attack.target_channels.push_back(item);
        }
    }
    return attack;
}

qpc::SessionConfig make_config(const RunSpec& spec) {
    qpc::SessionConfig config;
    config.seed = spec.seed;
    config.decoys_per_channel = spec.decoys;
    config.check_threshold = spec.threshold;
    config.attack = parse_attack(spec);
    return config;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

int cmd_run(const RunSpec& spec) {
    const qpc::Protocol protocol = parse_protocol_or_throw(spec.protocol);
    const uint64_t x = parse_value_or_throw(spec.x_text, "--x");
    const uint64_t y = parse_value_or_throw(spec.y_text, "--y");
    const qpc::ComparisonInput input{x, y, spec.bits};
    input.validate();  // out-of-range inputs are usage errors

    const qpc::Transcript transcript =
        qpc::run_session(protocol, input, make_config(spec), spec.trial);
    write_file(spec.out.empty() ? "transcript.json" : spec.out, transcript.to_json());

    switch (transcript.result) {
        case qpc::SessionResult::Equal:
            std::cout << "EQUAL\n";
            return 0;
        case qpc::SessionResult::NotEqual:
            std::cout << "NOT_EQUAL\n";
            return 0;
        case qpc::SessionResult::Aborted:
            std::cout << "ABORTED\n";
            return 2;
    }
    return 1;
}

int cmd_sweep(const RunSpec& spec) {
    const qpc::Protocol protocol = parse_protocol_or_throw(spec.protocol);
    const qpc::SweepResult result =
        qpc::run_sweep(protocol, spec.bits, spec.trials, spec.seed, spec.jobs);
    const std::string rendered = spec.format == "json" ? result.to_json() : result.to_csv();
    if (spec.out.empty()) {
        std::cout << rendered;
    } else {
        write_file(spec.out, rendered);
    }
    std::cout << "rows=" << result.rows.size() << " mismatches=" << result.mismatches << "\n";
    return 0;
}

int cmd_attack_stats(const RunSpec& spec) {
    const qpc::Protocol protocol = parse_protocol_or_throw(spec.protocol);
    const qpc::SessionConfig config = make_config(spec);
    const qpc::LeakageReport report =
        qpc::detection_stats(protocol, spec.bits, config, spec.trials, spec.jobs);

    std::string rendered;
    if (spec.format == "csv") {
        std::ostringstream csv;
        csv << "protocol,n_bits,trials,decoys,attack,abort_rate,analytic_abort_rate,"
               "tp_recoverable_xor\n";
        csv << to_string(protocol) << ',' << spec.bits << ',' << spec.trials << ','
            << spec.decoys << ',' << spec.attack << ',' << report.abort_rate << ','
            << report.analytic_abort_rate << ',' << (report.tp_recoverable_xor ? 1 : 0) << "\n";
        rendered = csv.str();
    } else {
        rendered = report.to_json();
    }
    if (spec.out.empty()) {
        std::cout << rendered;
    } else {
        write_file(spec.out, rendered);
    }
    std::cout << "abort_rate=" << report.abort_rate
              << " analytic=" << report.analytic_abort_rate << "\n";
    return 0;
}

void add_common_flags(CLI::App* cmd, RunSpec& spec) {
    cmd->add_option("--protocol", spec.protocol, "Protocol: ghz, chi, or swap")->required();
    cmd->add_option("--seed", spec.seed, "Root seed; all randomness derives from it");
    cmd->add_option("--decoys", spec.decoys,
                    "Decoy qubits (ghz/chi) or EPR check pairs (swap) per channel");
    cmd->add_option("--threshold", spec.threshold, "Check error-rate threshold in [0,1)");
    cmd->add_option("--attack", spec.attack, "Adversary: none or intercept-resend");
    cmd->add_option("--attack-basis", spec.attack_basis, "Interception basis: z, x, or random");
    cmd->add_option("--attack-channels", spec.attack_channels,
                    "Comma-separated channel names, or 'all'");
    cmd->add_option("--out", spec.out, "Output file path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qpc: quantum private comparison simulator"};
    app.require_subcommand(1);
    RunSpec spec;

    CLI::App* run = app.add_subcommand("run", "Run one comparison session");
    add_common_flags(run, spec);
    run->add_option("--x", spec.x_text, "Alice's input (decimal, 0x.., or 0b..)")->required();
    run->add_option("--y", spec.y_text, "Bob's input (decimal, 0x.., or 0b..)")->required();
    run->add_option("--bits", spec.bits, "Comparison width N in bits")->required();
    run->add_option("--trial", spec.trial, "Trial index for seed derivation");

    CLI::App* sweep = app.add_subcommand("sweep", "Exhaustive correctness sweep over all (x, y)");
    add_common_flags(sweep, spec);
    sweep->add_option("--bits", spec.bits, "Comparison width N in bits (<= 6)")->required();
    sweep->add_option("--trials", spec.trials, "Seeds per (x, y) pair");
    sweep->add_option("--jobs", spec.jobs, "Worker threads");
    sweep->add_option("--format", spec.format, "Output format: csv (default) or json");

    CLI::App* stats = app.add_subcommand("attack-stats", "Eavesdropping detection statistics");
    add_common_flags(stats, spec);
    stats->add_option("--bits", spec.bits, "Comparison width N in bits");
    stats->add_option("--trials", spec.trials, "Number of sessions (>= 100)")
        ->check(CLI::Range(100u, 100000000u));
    stats->add_option("--jobs", spec.jobs, "Worker threads");
    stats->add_option("--format", spec.format, "Output format: json (default) or csv");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(spec);
        if (sweep->parsed()) return cmd_sweep(spec);
        if (stats->parsed()) return cmd_attack_stats(spec);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit clean, errors exit 1
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
