// Copyright 2026 The qpow Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
    using namespace qpow::cli;

    RunConfig cfg;
    std::string text;
    std::string out_path;
    std::size_t min_qubits = 0;
    std::size_t max_qubits = 0;

    CLI::App app{"qpow: quantum proof-of-work miner, verifier and analysis"};
    app.require_subcommand(1);

    std::string backend = "exact";
    std::string preset = "transpiled-quito";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--qubits", cfg.qubits, "Ansatz qubit count")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for nonces, noise and sampling")
            ->capture_default_str();
        sub->add_option("--backend", backend, "exact or noisy")
            ->check(CLI::IsMember({"exact", "noisy"}))
            ->capture_default_str();
        sub->add_option("--noise-preset", preset, "ideal or transpiled-quito")
            ->check(CLI::IsMember({"ideal", "transpiled-quito"}))
            ->capture_default_str();
    };

    auto *mine = app.add_subcommand("mine", "Mine blocks onto a chain file");
    add_common(mine);
    mine->add_option("--difficulty", cfg.difficulty, "Leading zero hex chars")
        ->capture_default_str();
    mine->add_option("--blocks", cfg.blocks, "Blocks to append")
        ->capture_default_str();
    mine->add_option("--chain", cfg.chain_path, "Chain JSON file")
        ->capture_default_str();
    mine->add_option("--jobs", cfg.jobs, "Parallel nonce search threads (exact)")
        ->capture_default_str();
    mine->add_option("--max-attempts", cfg.max_attempts, "Nonce attempts per block")
        ->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Verify a chain file");
    verify->add_option("--difficulty", cfg.difficulty, "Leading zero hex chars")
        ->capture_default_str();
    verify->add_option("--chain", cfg.chain_path, "Chain JSON file")
        ->capture_default_str();

    auto *hash = app.add_subcommand("hash", "Trace one qPoW evaluation");
    add_common(hash);
    hash->add_option("text", text, "Input text")->required();
    hash->add_option("--shots", cfg.shots, "Shots for the histogram dump")
        ->capture_default_str();
    hash->add_option("--out", out_path, "Write a sampled histogram CSV here");
    hash->add_flag("--dump-circuit", cfg.dump_circuit, "Print the gate list");

    auto *bench = app.add_subcommand("bench", "Time the simulator vs qubits");
    bench->add_option("--min-qubits", min_qubits, "Smallest n (default 2)");
    bench->add_option("--max-qubits", max_qubits, "Largest n (default 12)");
    bench->add_option("--reps", cfg.reps, "Repetitions per n (median)")
        ->capture_default_str();
    bench->add_option("--seed", cfg.seed, "Seed for random digests");
    bench->add_option("--out", out_path, "CSV output path (default stdout)");

    auto *adv = app.add_subcommand("advantage", "Quantum-advantage model sweep");
    adv->add_option("--min-qubits", min_qubits, "Smallest n (default 2)");
    adv->add_option("--max-qubits", max_qubits, "Largest n (default 40)");
    adv->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    cfg.backend = backend == "noisy" ? BackendKind::Noisy : BackendKind::Exact;
    cfg.noise_preset = qpow::parse_noise_preset(preset);
    if (!out_path.empty()) {
        cfg.output_path = out_path;
    }
    if (min_qubits != 0) {
        cfg.min_qubits = min_qubits;
    }
    if (max_qubits != 0) {
        cfg.max_qubits = max_qubits;
    }

    Streams io{std::cout, std::cerr};
    if (*mine) {
        return cmd_mine(cfg, io);
    }
    if (*verify) {
        return cmd_verify(cfg, io);
    }
    if (*hash) {
        return cmd_hash(cfg, text, io);
    }
    if (*bench) {
        return cmd_bench(cfg, io);
    }
    return cmd_advantage(cfg, io);
}
