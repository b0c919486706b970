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
 * @file noise.hpp
 * Emulation of a noisy backend disagreeing with the exact simulator.
 *
 * The channel keeps the exact most-probable state with probability
 * (1 - e_cnot)^cnots and otherwise replaces it with a uniformly random basis
 * state; every output bit is then flipped independently with probability
 * e_readout. Its expected agreement is the analytic accuracy estimate (plus
 * a < 2^-n chance of coincidental agreement).
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "circuit.hpp"
#include "hashing.hpp"
#include "random.hpp"
#include "statevector.hpp"

namespace qpow {

struct NoiseParams {
    double e_cnot{0.01};
    double e_readout{0.02};
    /// Two-qubit gate count entering the survival probability; empty means
    /// "count the CRX gates of the circuit".
    std::optional<double> effective_cnots{};
    std::uint64_t seed{kDefaultSeed};

    void validate() const {
        auto check = [](double p, const char *name) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument(std::string(name) +
                                            " must be a probability in [0, 1]");
            }
        };
        check(e_cnot, "e_cnot");
        check(e_readout, "e_readout");
        if (effective_cnots && !(*effective_cnots >= 0.0)) {
            throw std::invalid_argument("effective_cnots must be >= 0");
        }
    }
};

/// (1 - e_cnot)^cnots * (1 - e_readout)^n
[[nodiscard]] inline double accuracy_estimate(std::size_t n_qubits,
                                              double cnots,
                                              const NoiseParams &params) {
    params.validate();
    if (n_qubits < 1) {
        throw std::invalid_argument("accuracy_estimate needs n >= 1");
    }
    if (!(cnots >= 0.0)) {
        throw std::invalid_argument("cnot count must be >= 0");
    }
    return std::pow(1.0 - params.e_cnot, cnots) *
           std::pow(1.0 - params.e_readout, static_cast<double>(n_qubits));
}

/// One noisy read of the state's most-probable basis state.
[[nodiscard]] inline BasisOutcome noisy_outcome(const Statevector &state,
                                                const NoiseParams &params,
                                                double cnots, Rng &rng) {
    params.validate();
    const double survival = std::pow(1.0 - params.e_cnot, cnots);
    std::uint64_t index = 0;
    if (rng.uniform01() < survival) {
        index = most_probable_state(state).index;
    } else {
        index = rng.below(state.size());
    }
    for (std::size_t q = 0; q < state.n_qubits(); ++q) {
        if (rng.uniform01() < params.e_readout) {
            index ^= std::uint64_t{1} << (state.n_qubits() - 1 - q);
        }
    }
    return outcome_at(state, index);
}

enum class NoisePreset { Ideal, TranspiledQuito };

[[nodiscard]] inline std::string_view to_string(NoisePreset preset) noexcept {
    return preset == NoisePreset::Ideal ? "ideal" : "transpiled-quito";
}

[[nodiscard]] inline NoisePreset parse_noise_preset(std::string_view name) {
    if (name == "ideal") {
        return NoisePreset::Ideal;
    }
    if (name == "transpiled-quito") {
        return NoisePreset::TranspiledQuito;
    }
    throw std::invalid_argument("unknown noise preset '" + std::string(name) +
                                "'");
}

/// Reference statistics of a 5-qubit superconducting device, per qubit
/// count. Only `avg_cnots` drives emulation; the rest is kept for reports.
struct DeviceReferenceRow {
    std::size_t n_qubits;
    double measured_accuracy; // fraction
    double avg_cnots;         // transpiled circuit
    double sim_vs_qc_time_ratio_1e3;
};

inline constexpr std::array<DeviceReferenceRow, 4> kQuitoReference{{
    {2, 0.94, 3.7, 6.0},
    {3, 0.71, 17.5, 8.0},
    {4, 0.69, 40.4, 8.4},
    {5, 0.35, 90.7, 10.5},
}};

/// Two-qubit gate count a preset assigns to an n-qubit ansatz.
[[nodiscard]] inline double preset_cnots(NoisePreset preset,
                                         std::size_t n_qubits) {
    if (preset == NoisePreset::Ideal) {
        if (n_qubits < kMinAnsatzQubits) {
            throw std::invalid_argument("ideal preset needs n >= 2");
        }
        return static_cast<double>(n_qubits * n_qubits - n_qubits);
    }
    for (const auto &row : kQuitoReference) {
        if (row.n_qubits == n_qubits) {
            return row.avg_cnots;
        }
    }
    throw std::invalid_argument(
        "transpiled-quito preset covers n in [2, 5], got " +
        std::to_string(n_qubits));
}

/**
 * @brief Fraction of random digests whose noisy and exact most-probable
 * states agree. The preset's CNOT count overrides params.effective_cnots.
 */
[[nodiscard]] inline double table1_emulation(std::size_t n_qubits,
                                             std::size_t trials,
                                             NoisePreset preset,
                                             NoiseParams params = {}) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const double cnots = preset_cnots(preset, n_qubits);
    params.validate();

    Rng rng{params.seed};
    std::size_t matches = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Digest256::Bytes bytes{};
        for (auto &b : bytes) {
            b = static_cast<std::uint8_t>(rng.next_u32() >> 24U);
        }
        const auto state =
            simulate(build_ansatz(encode_angles(Digest256{bytes}), n_qubits));
        const auto exact = most_probable_state(state);
        const auto noisy = noisy_outcome(state, params, cnots, rng);
        if (noisy.index == exact.index) {
            ++matches;
        }
    }
    return static_cast<double>(matches) / static_cast<double>(trials);
}

} // namespace qpow
