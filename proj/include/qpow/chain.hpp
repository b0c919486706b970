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
 * @file chain.hpp
 * qPoW hash composition, difficulty test, mining and verification.
 *
 *   h1 = SHA3(text)
 *   b  = most probable state of ansatz(encode_angles(h1), n)
 *   h2 = SHA3(h1 || pack(b))
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "circuit.hpp"
#include "hashing.hpp"
#include "noise.hpp"
#include "random.hpp"
#include "statevector.hpp"

namespace qpow {

/// Required number of leading '0' hex characters, 0..64.
class Difficulty {
  public:
    constexpr Difficulty() = default;
    explicit Difficulty(unsigned leading_zero_hex_chars)
        : value_{leading_zero_hex_chars} {
        if (value_ > 64) {
            throw std::invalid_argument("difficulty must be in [0, 64], got " +
                                        std::to_string(value_));
        }
    }
    [[nodiscard]] constexpr unsigned leading_zero_hex_chars() const noexcept {
        return value_;
    }

  private:
    unsigned value_{0};
};

struct Block {
    std::uint64_t index{0};
    std::int64_t timestamp{0};
    Digest256 prev_hash{};
    std::string payload;
    std::uint32_t nonce{0};
    std::size_t n_qubits{4};
    Digest256 pow_hash{};

    friend bool operator==(const Block &, const Block &) = default;
};

inline constexpr std::string_view kGenesisPayload = "genesis";

/// decimal(nonce) ++ payload ++ hex(prev_hash)
[[nodiscard]] inline std::string serialize_text(std::uint32_t nonce,
                                                std::string_view payload,
                                                const Digest256 &prev_hash) {
    std::string text = std::to_string(nonce);
    text.append(payload);
    text.append(prev_hash.hex());
    return text;
}

/// Packs an n-bit string MSB-first into ceil(n/8) bytes, zero-padded right.
[[nodiscard]] inline std::vector<std::uint8_t> pack_bits(std::string_view bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain 0 and 1");
        }
    }
    return out;
}

struct ExactBackend {};

/// Reads the circuit output through the emulated noise channel. Owns its
/// generator, seeded once from params.seed.
class NoisyBackend {
  public:
    explicit NoisyBackend(NoiseParams params)
        : params_{params}, rng_{params.seed} {
        params_.validate();
    }

    NoisyBackend(NoisePreset preset, std::size_t n_qubits, NoiseParams params)
        : NoisyBackend{with_cnots(params, preset_cnots(preset, n_qubits))} {}

    BasisOutcome read(const Statevector &state, const Circuit &circuit) {
        const double cnots = params_.effective_cnots.value_or(
            static_cast<double>(count_two_qubit_gates(circuit)));
        return noisy_outcome(state, params_, cnots, rng_);
    }

    [[nodiscard]] const NoiseParams &params() const noexcept { return params_; }

  private:
    static NoiseParams with_cnots(NoiseParams p, double cnots) {
        p.effective_cnots = cnots;
        return p;
    }

    NoiseParams params_;
    Rng rng_;
};

using Backend = std::variant<ExactBackend, NoisyBackend>;

/// Every intermediate of one qPoW evaluation.
struct PowTrace {
    Digest256 pre_hash;
    AngleVector angles;
    BasisOutcome outcome;
    Digest256 pow_hash;
};

[[nodiscard]] inline PowTrace qpow_trace(std::string_view text,
                                         std::size_t n_qubits,
                                         Backend &backend) {
    PowTrace trace;
    trace.pre_hash = sha3_256(text);
    trace.angles = encode_angles(trace.pre_hash);
    const Circuit circuit = build_ansatz(trace.angles, n_qubits);
    const Statevector state = simulate(circuit);
    trace.outcome = std::visit(
        [&](auto &b) -> BasisOutcome {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, NoisyBackend>) {
                return b.read(state, circuit);
            } else {
                return most_probable_state(state);
            }
        },
        backend);

    const auto &h1 = trace.pre_hash.bytes();
    std::vector<std::uint8_t> second(h1.begin(), h1.end());
    const auto packed = pack_bits(trace.outcome.bits);
    second.insert(second.end(), packed.begin(), packed.end());
    trace.pow_hash = sha3_256(second);
    return trace;
}

[[nodiscard]] inline Digest256 qpow_hash(std::string_view text,
                                         std::size_t n_qubits,
                                         Backend &backend) {
    return qpow_trace(text, n_qubits, backend).pow_hash;
}

[[nodiscard]] inline Digest256 qpow_hash(std::string_view text,
                                         std::size_t n_qubits) {
    Backend exact{ExactBackend{}};
    return qpow_hash(text, n_qubits, exact);
}

[[nodiscard]] inline bool check_difficulty(const Digest256 &digest,
                                           Difficulty d) {
    const unsigned zeros = d.leading_zero_hex_chars();
    for (unsigned k = 0; k < zeros; ++k) {
        if (digest.nibble(k) != 0) {
            return false;
        }
    }
    return true;
}

[[nodiscard]] inline std::int64_t unix_now() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

[[nodiscard]] inline Block make_genesis(std::size_t n_qubits,
                                        std::int64_t timestamp) {
    Block g;
    g.index = 0;
    g.timestamp = timestamp;
    g.payload = std::string(kGenesisPayload);
    g.nonce = 0;
    g.n_qubits = n_qubits;
    g.pow_hash = qpow_hash(serialize_text(0, g.payload, g.prev_hash), n_qubits);
    return g;
}

struct MineOptions {
    std::uint64_t max_attempts{std::uint64_t{1} << 20U};
    /// Wall-clock seconds when empty.
    std::optional<std::int64_t> timestamp{};
};

struct MineResult {
    Block block;
    std::uint64_t attempts{0};
};

class MiningError : public std::runtime_error {
  public:
    explicit MiningError(std::uint64_t attempts)
        : std::runtime_error("no nonce met the difficulty after " +
                             std::to_string(attempts) + " attempts"),
          attempts_{attempts} {}
    [[nodiscard]] std::uint64_t attempts() const noexcept { return attempts_; }

  private:
    std::uint64_t attempts_;
};

namespace detail {
inline Block next_block(const Block &prev, std::string payload,
                        std::uint32_t nonce, std::size_t n_qubits,
                        const Digest256 &pow_hash, const MineOptions &opts) {
    Block b;
    b.index = prev.index + 1;
    b.timestamp = opts.timestamp.value_or(unix_now());
    b.prev_hash = prev.pow_hash;
    b.payload = std::move(payload);
    b.nonce = nonce;
    b.n_qubits = n_qubits;
    b.pow_hash = pow_hash;
    return b;
}
} // namespace detail

/// Draws nonces from `nonces` in attempt order until the difficulty passes.
[[nodiscard]] inline MineResult mine_block(const Block &prev,
                                           std::string payload, Difficulty d,
                                           std::size_t n_qubits,
                                           Backend &backend,
                                           const NonceStream &nonces,
                                           const MineOptions &opts = {}) {
    for (std::uint64_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        const std::uint32_t nonce = nonces.nonce(attempt);
        const Digest256 h = qpow_hash(
            serialize_text(nonce, payload, prev.pow_hash), n_qubits, backend);
        if (check_difficulty(h, d)) {
            return {detail::next_block(prev, std::move(payload), nonce,
                                       n_qubits, h, opts),
                    attempt + 1};
        }
    }
    throw MiningError(opts.max_attempts);
}

/**
 * @brief Exact-backend search split over `jobs` threads.
 *
 * Worker w tries attempts w, w + jobs, ...; the lowest successful attempt
 * wins, so the result equals the serial search with the same stream.
 */
[[nodiscard]] inline MineResult
mine_block_parallel(const Block &prev, std::string payload, Difficulty d,
                    std::size_t n_qubits, const NonceStream &nonces,
                    unsigned jobs, const MineOptions &opts = {}) {
    if (jobs <= 1) {
        Backend exact{ExactBackend{}};
        return mine_block(prev, std::move(payload), d, n_qubits, exact, nonces,
                          opts);
    }
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    std::vector<Digest256> found(jobs);
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::uint64_t attempt = w; attempt < opts.max_attempts;
                     attempt += jobs) {
                    if (attempt > best.load(std::memory_order_relaxed)) {
                        return;
                    }
                    const Digest256 h = qpow_hash(
                        serialize_text(nonces.nonce(attempt), payload,
                                       prev.pow_hash),
                        n_qubits);
                    if (check_difficulty(h, d)) {
                        found[w] = h;
                        std::uint64_t cur = best.load();
                        while (attempt < cur &&
                               !best.compare_exchange_weak(cur, attempt)) {
                        }
                        return;
                    }
                }
            });
        }
    }
    const std::uint64_t winner = best.load();
    if (winner == kNone) {
        throw MiningError(opts.max_attempts);
    }
    return {detail::next_block(prev, std::move(payload), nonces.nonce(winner),
                               n_qubits, found[winner % jobs], opts),
            winner + 1};
}

enum class VerifyStatus {
    Ok,
    EmptyChain,
    BadGenesis,
    IndexNotConsecutive,
    PrevHashMismatch,
    PowHashMismatch,
    DifficultyNotMet,
};

[[nodiscard]] constexpr std::string_view to_string(VerifyStatus s) noexcept {
    switch (s) {
    case VerifyStatus::Ok:
        return "ok";
    case VerifyStatus::EmptyChain:
        return "empty chain";
    case VerifyStatus::BadGenesis:
        return "invalid genesis block";
    case VerifyStatus::IndexNotConsecutive:
        return "block index not consecutive";
    case VerifyStatus::PrevHashMismatch:
        return "prev_hash does not match previous block";
    case VerifyStatus::PowHashMismatch:
        return "pow_hash does not match simulated qPoW";
    case VerifyStatus::DifficultyNotMet:
        return "pow_hash does not meet difficulty";
    }
    return "unknown";
}

struct VerifyResult {
    VerifyStatus status{VerifyStatus::Ok};
    /// Index (position in the chain) of the offending block.
    std::size_t block{0};

    [[nodiscard]] bool ok() const noexcept { return status == VerifyStatus::Ok; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Recomputes the block's hash with `pow(text, n_qubits)`; one call per block.
template <class PowFn>
[[nodiscard]] VerifyResult verify_block_with(const Block &block,
                                             const Block &prev, Difficulty d,
                                             PowFn &&pow) {
    if (block.prev_hash != prev.pow_hash) {
        return {VerifyStatus::PrevHashMismatch, 0};
    }
    const Digest256 h =
        pow(serialize_text(block.nonce, block.payload, block.prev_hash),
            block.n_qubits);
    if (h != block.pow_hash) {
        return {VerifyStatus::PowHashMismatch, 0};
    }
    if (!check_difficulty(block.pow_hash, d)) {
        return {VerifyStatus::DifficultyNotMet, 0};
    }
    return {};
}

namespace detail {
inline Digest256 exact_pow(std::string_view text, std::size_t n_qubits) {
    return qpow_hash(text, n_qubits);
}
} // namespace detail

/// Always re-simulates with the exact backend.
[[nodiscard]] inline VerifyResult verify_block(const Block &block,
                                               const Block &prev,
                                               Difficulty d) {
    try {
        return verify_block_with(block, prev, d, detail::exact_pow);
    } catch (const std::invalid_argument &) {
        // Unsimulable qubit count can never match.
        return {VerifyStatus::PowHashMismatch, 0};
    }
}

[[nodiscard]] inline VerifyResult verify_genesis(const Block &genesis) {
    if (genesis.index != 0 || !genesis.prev_hash.is_zero()) {
        return {VerifyStatus::BadGenesis, 0};
    }
    try {
        const Digest256 h = qpow_hash(
            serialize_text(genesis.nonce, genesis.payload, genesis.prev_hash),
            genesis.n_qubits);
        if (h != genesis.pow_hash) {
            return {VerifyStatus::BadGenesis, 0};
        }
    } catch (const std::invalid_argument &) {
        return {VerifyStatus::BadGenesis, 0};
    }
    return {};
}

/// Genesis must be index 0 with a zero prev_hash; every later block must
/// pass verify_block against its predecessor.
[[nodiscard]] inline VerifyResult verify_chain(std::span<const Block> chain,
                                               Difficulty d) {
    if (chain.empty()) {
        return {VerifyStatus::EmptyChain, 0};
    }
    if (auto g = verify_genesis(chain.front()); !g) {
        return g;
    }
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i].index != chain[i - 1].index + 1) {
            return {VerifyStatus::IndexNotConsecutive, i};
        }
        auto r = verify_block(chain[i], chain[i - 1], d);
        if (!r) {
            r.block = i;
            return r;
        }
    }
    return {};
}

} // namespace qpow
