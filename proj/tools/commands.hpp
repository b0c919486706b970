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
/**
 * @file commands.hpp
 * Subcommand implementations behind the qpow CLI. Each returns a process
 * exit code: 0 success, 1 verification or mining failure, 2 usage/IO error.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qpow/analysis.hpp"
#include "qpow/chain.hpp"
#include "qpow/chain_json.hpp"
#include "qpow/noise.hpp"

namespace qpow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest register bench will allocate by default (4 GiB of amplitudes).
inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{4} << 30U;

enum class BackendKind { Exact, Noisy };

struct RunConfig {
    std::size_t qubits{4};
    unsigned difficulty{1};
    std::size_t blocks{5};
    std::uint64_t shots{20000};
    BackendKind backend{BackendKind::Exact};
    NoisePreset noise_preset{NoisePreset::TranspiledQuito};
    std::uint64_t seed{kDefaultSeed};
    std::filesystem::path chain_path{"chain.json"};
    std::optional<std::filesystem::path> output_path{};
    std::optional<std::size_t> min_qubits{};
    std::optional<std::size_t> max_qubits{};
    std::size_t reps{3};
    unsigned jobs{1};
    std::uint64_t max_attempts{std::uint64_t{1} << 20U};
    std::uint64_t memory_budget{kDefaultMemoryBudget};
    bool dump_circuit{false};
};

struct Streams {
    std::ostream &out;
    std::ostream &err;
};

namespace detail {

inline Backend make_backend(const RunConfig &cfg) {
    if (cfg.backend == BackendKind::Exact) {
        return ExactBackend{};
    }
    NoiseParams params;
    params.seed = cfg.seed;
    return NoisyBackend{cfg.noise_preset, cfg.qubits, params};
}

/// Runs `body` with the configured output file, or `fallback` if none.
template <class Body>
int with_output(const RunConfig &cfg, std::ostream &fallback, Streams io,
                Body &&body) {
    if (!cfg.output_path) {
        return body(fallback);
    }
    std::ofstream file(*cfg.output_path, std::ios::trunc);
    if (!file) {
        io.err << "error: cannot write " << cfg.output_path->string() << '\n';
        return kExitUsage;
    }
    return body(file);
}

} // namespace detail

/// Extends (or creates) the chain file by cfg.blocks mined blocks.
inline int cmd_mine(const RunConfig &cfg, Streams io) {
    std::vector<Block> chain;
    std::error_code ec;
    const bool exists = std::filesystem::exists(cfg.chain_path, ec);
    try {
        const Difficulty difficulty{cfg.difficulty};
        Backend backend = detail::make_backend(cfg);

        if (exists) {
            chain = read_chain(cfg.chain_path);
            if (chain.empty() || !verify_genesis(chain.front())) {
                io.err << "error: " << cfg.chain_path.string()
                       << " does not start with a valid genesis block\n";
                return kExitUsage;
            }
        } else {
            chain.push_back(make_genesis(cfg.qubits, unix_now()));
            io.out << "genesis pow_hash " << chain.back().pow_hash.hex() << '\n';
        }

        MineOptions opts;
        opts.max_attempts = cfg.max_attempts;
        for (std::size_t k = 0; k < cfg.blocks; ++k) {
            const Block &prev = chain.back();
            const std::uint64_t index = prev.index + 1;
            std::string payload =
                "Schroedinger paid Einstein " + std::to_string(index) + " qBTC";
            const NonceStream nonces{cfg.seed + index};

            const auto start = std::chrono::steady_clock::now();
            MineResult mined =
                (cfg.backend == BackendKind::Exact && cfg.jobs > 1)
                    ? mine_block_parallel(prev, std::move(payload), difficulty,
                                          cfg.qubits, nonces, cfg.jobs, opts)
                    : mine_block(prev, std::move(payload), difficulty,
                                 cfg.qubits, backend, nonces, opts);
            const std::chrono::duration<double> dt =
                std::chrono::steady_clock::now() - start;

            io.out << "block " << mined.block.index << " nonce "
                   << mined.block.nonce << " attempts " << mined.attempts
                   << " elapsed " << std::fixed << std::setprecision(3)
                   << dt.count() << "s pow_hash " << mined.block.pow_hash.hex()
                   << '\n';
            io.out.unsetf(std::ios::floatfield);
            chain.push_back(std::move(mined.block));
        }
        write_chain(cfg.chain_path, chain);
    } catch (const MiningError &e) {
        io.err << "error: " << e.what() << '\n';
        write_chain(cfg.chain_path, chain);
        return kExitFailure;
    } catch (const ChainFormatError &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    io.out << "wrote " << chain.size() << " blocks to "
           << cfg.chain_path.string() << '\n';
    return kExitOk;
}

/// Verifies the chain file with the exact simulator.
inline int cmd_verify(const RunConfig &cfg, Streams io) {
    std::vector<Block> chain;
    try {
        if (!std::filesystem::exists(cfg.chain_path)) {
            io.err << "error: chain file " << cfg.chain_path.string()
                   << " not found\n";
            return kExitUsage;
        }
        chain = read_chain(cfg.chain_path);
        const Difficulty difficulty{cfg.difficulty};

        // Per-block tally against each stored predecessor, for reporting.
        std::size_t passing = 0;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            if (verify_block(chain[i], chain[i - 1], difficulty)) {
                ++passing;
            }
        }
        if (chain.size() > 1) {
            const auto mined = chain.size() - 1;
            io.out << "blocks passing verification: " << passing << '/'
                   << mined << " (" << std::setprecision(4)
                   << static_cast<double>(passing) / static_cast<double>(mined)
                   << ")\n";
        }

        const VerifyResult r = verify_chain(chain, difficulty);
        if (!r) {
            io.out << "chain INVALID: block " << r.block << ": "
                   << to_string(r.status) << '\n';
            return kExitFailure;
        }
        io.out << "chain OK: " << chain.size() << " blocks\n";
        return kExitOk;
    } catch (const ChainFormatError &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

/// Stage-by-stage trace of one qPoW evaluation.
inline int cmd_hash(const RunConfig &cfg, const std::string &text, Streams io) {
    try {
        Backend backend = detail::make_backend(cfg);
        const PowTrace t = qpow_trace(text, cfg.qubits, backend);
        io.out << "text: " << text << '\n';
        io.out << "h1: " << t.pre_hash.hex() << '\n';
        io.out << "angles (x pi/8):";
        for (auto level : t.angles.levels()) {
            io.out << ' ' << static_cast<int>(level);
        }
        io.out << '\n';
        io.out << "outcome: " << t.outcome.bits << " (p = "
               << std::setprecision(6) << t.outcome.probability << ")\n";
        io.out << "h2: " << t.pow_hash.hex() << '\n';

        const Circuit circuit = build_ansatz(t.angles, cfg.qubits);
        if (cfg.dump_circuit) {
            io.out << dump_circuit(circuit);
        }
        if (cfg.output_path) {
            const auto hist =
                sample_counts(simulate(circuit), cfg.shots, cfg.seed);
            io.out << "sampled argmax (" << cfg.shots
                   << " shots): " << histogram_argmax(hist) << '\n';
            return detail::with_output(cfg, io.out, io, [&](std::ostream &os) {
                write_histogram_csv(os, hist);
                return kExitOk;
            });
        }
        return kExitOk;
    } catch (const std::invalid_argument &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

/// Measured simulator scaling as CSV, plus the fitted slope.
inline int cmd_bench(const RunConfig &cfg, Streams io) {
    BenchOptions opts;
    opts.n_min = cfg.min_qubits.value_or(2);
    opts.n_max = cfg.max_qubits.value_or(12);
    opts.repetitions = cfg.reps;
    opts.seed = cfg.seed;
    if (opts.n_max <= kMaxStatevectorQubits &&
        statevector_bytes(opts.n_max) > cfg.memory_budget) {
        io.err << "error: " << opts.n_max << " qubits needs "
               << statevector_bytes(opts.n_max)
               << " bytes, over the memory budget of " << cfg.memory_budget
               << '\n';
        return kExitUsage;
    }
    try {
        const BenchResult result = bench_simulator(opts);
        std::ostream &summary = cfg.output_path ? io.out : io.err;
        const int rc =
            detail::with_output(cfg, io.out, io, [&](std::ostream &os) {
                write_bench_csv(os, result.records);
                return kExitOk;
            });
        if (result.records.size() >= 2) {
            summary << "fitted log10 slope: " << std::setprecision(4)
                    << result.fit.slope << " per qubit (model fit: "
                    << ClassicalFit{}.slope << ")\n";
        }
        return rc;
    } catch (const std::invalid_argument &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

/// Advantage-model sweep as CSV, plus crossover summaries.
inline int cmd_advantage(const RunConfig &cfg, Streams io) {
    const std::size_t n_min = cfg.min_qubits.value_or(2);
    const std::size_t n_max = cfg.max_qubits.value_or(40);
    const AdvantageModel model{};
    try {
        const int rc =
            detail::with_output(cfg, io.out, io, [&](std::ostream &os) {
                write_advantage_csv(os, model, n_min, n_max);
                return kExitOk;
            });
        if (rc != kExitOk) {
            return rc;
        }
    } catch (const std::invalid_argument &e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostream &summary = cfg.output_path ? io.out : io.err;
    const auto speed = find_crossover(model, CrossoverCriterion::SpeedRatio);
    const auto adv = find_crossover(model, CrossoverCriterion::Advantage);
    summary << std::setprecision(4);
    if (speed.n) {
        summary << "speed ratio >= 1 from n = " << *speed.n << '\n';
    } else {
        summary << "speed ratio stays below 1 up to n = 200\n";
    }
    if (adv.n) {
        summary << "advantage >= 1 from n = " << *adv.n << '\n';
    } else {
        summary << "advantage stays below 1 up to n = 200 (max " << adv.best_value
                << " at n = " << adv.best_n << ")\n";
    }
    return kExitOk;
}

} // namespace qpow::cli
