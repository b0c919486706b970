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
 * @file statevector.hpp
 * Exact statevector simulation, most-probable-state extraction and
 * Born-rule sampling.
 *
 * Qubit 0 is the most significant bit of a basis index, so basis state
 * index i renders as the n-bit binary string of i.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "random.hpp"

namespace qpow {

/// Largest register the simulator will allocate (2^30 amplitudes, 16 GiB).
inline constexpr std::size_t kMaxStatevectorQubits = 30;

/// Bytes needed to hold an n-qubit statevector.
[[nodiscard]] constexpr std::uint64_t statevector_bytes(std::size_t n_qubits) {
    return (std::uint64_t{1} << n_qubits) * sizeof(std::complex<double>);
}

/// Renders basis index as an n-bit string, qubit 0 first.
[[nodiscard]] inline std::string basis_bits(std::uint64_t index,
                                            std::size_t n_qubits) {
    std::string bits(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1U) {
            bits[q] = '1';
        }
    }
    return bits;
}

using Mat2 = std::array<std::complex<double>, 4>; // row-major

[[nodiscard]] inline Mat2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {std::complex<double>{c, 0}, std::complex<double>{0, -s},
            std::complex<double>{0, -s}, std::complex<double>{c, 0}};
}

[[nodiscard]] inline Mat2 rz_matrix(double theta) {
    return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
}

class Statevector {
  public:
    using ComplexT = std::complex<double>;

    /// |0...0> on n_qubits.
    explicit Statevector(std::size_t n_qubits) : n_qubits_{n_qubits} {
        if (n_qubits_ == 0 || n_qubits_ > kMaxStatevectorQubits) {
            throw std::invalid_argument(
                "statevector qubit count must be in [1, " +
                std::to_string(kMaxStatevectorQubits) + "], got " +
                std::to_string(n_qubits_));
        }
        amplitudes_.assign(std::size_t{1} << n_qubits_, ComplexT{0, 0});
        amplitudes_[0] = 1.0;
    }

    /// Takes ownership of explicit amplitudes; size must be a power of two.
    explicit Statevector(std::vector<ComplexT> amplitudes)
        : amplitudes_{std::move(amplitudes)} {
        const std::size_t dim = amplitudes_.size();
        if (dim < 2 || (dim & (dim - 1)) != 0) {
            throw std::invalid_argument(
                "amplitude count must be a power of two >= 2");
        }
        n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] const std::vector<ComplexT> &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] ComplexT operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    [[nodiscard]] double probability(std::size_t i) const {
        return std::norm(amplitudes_.at(i));
    }

    [[nodiscard]] double norm() const {
        double sum = 0.0;
        for (const auto &a : amplitudes_) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }

    /// Applies a 2x2 matrix to `target`, restricted to basis states whose
    /// `control_mask` bits are all set (mask 0 = unconditional).
    void apply(const Mat2 &m, std::size_t target, std::size_t control_mask = 0) {
        const std::size_t stride = bit_of(target);
        const std::size_t dim = amplitudes_.size();
        ComplexT *data = amplitudes_.data();
        for (std::size_t block = 0; block < dim; block += 2 * stride) {
            for (std::size_t k = block; k < block + stride; ++k) {
                if ((k & control_mask) != control_mask) {
                    continue;
                }
                const ComplexT a0 = data[k];
                const ComplexT a1 = data[k + stride];
                data[k] = m[0] * a0 + m[1] * a1;
                data[k + stride] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    void apply(const Gate &g) {
        switch (g.kind) {
        case GateKind::RX:
            apply(rx_matrix(g.angle), g.target);
            break;
        case GateKind::RZ:
            apply(rz_matrix(g.angle), g.target);
            break;
        case GateKind::CRX:
            apply(rx_matrix(g.angle), g.target, bit_of(g.control.value()));
            break;
        }
    }

    /// Index mask of qubit q (qubit 0 is the most significant bit).
    [[nodiscard]] std::size_t bit_of(std::size_t qubit) const {
        if (qubit >= n_qubits_) {
            throw std::out_of_range("qubit index out of range");
        }
        return std::size_t{1} << (n_qubits_ - 1 - qubit);
    }

  private:
    std::size_t n_qubits_{0};
    std::vector<ComplexT> amplitudes_;
};

/**
 * @brief Runs the circuit from |0...0>.
 *
 * `after_gate(index, state)` is invoked after every gate; tests use it to
 * check unitarity at gate granularity.
 */
template <class Observer>
[[nodiscard]] Statevector simulate(const Circuit &circuit, Observer &&after_gate) {
    Statevector state{circuit.n_qubits()};
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        state.apply(gates[i]);
        after_gate(i, static_cast<const Statevector &>(state));
    }
    return state;
}

[[nodiscard]] inline Statevector simulate(const Circuit &circuit) {
    return simulate(circuit, [](std::size_t, const Statevector &) {});
}

struct BasisOutcome {
    std::uint64_t index{0};
    std::string bits;
    double probability{0.0};

    friend bool operator==(const BasisOutcome &, const BasisOutcome &) = default;
};

[[nodiscard]] inline BasisOutcome outcome_at(const Statevector &state,
                                             std::uint64_t index) {
    return BasisOutcome{index, basis_bits(index, state.n_qubits()),
                        state.probability(index)};
}

/// Basis state of maximal probability; ties go to the lowest index.
[[nodiscard]] inline BasisOutcome most_probable_state(const Statevector &state) {
    std::uint64_t best = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    return outcome_at(state, best);
}

using Histogram = std::map<std::string, std::uint64_t>;

/// Draws `shots` basis states from |amplitude|^2 with a seeded generator.
[[nodiscard]] inline Histogram sample_counts(const Statevector &state,
                                             std::uint64_t shots,
                                             std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::vector<double> cumulative(state.size());
    double total = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        total += std::norm(state[i]);
        cumulative[i] = total;
    }

    std::vector<std::uint64_t> counts(state.size(), 0);
    Rng rng{seed};
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
        // Rounding at the top end can step past the last nonzero bucket.
        if (idx == state.size()) {
            --idx;
            while (idx > 0 && std::norm(state[idx]) == 0.0) {
                --idx;
            }
        }
        ++counts[idx];
    }

    Histogram hist;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            hist.emplace(basis_bits(i, state.n_qubits()), counts[i]);
        }
    }
    return hist;
}

/// Most frequent bitstring; ties go to the lexicographically smallest.
[[nodiscard]] inline std::string histogram_argmax(const Histogram &hist) {
    std::string best;
    std::uint64_t best_count = 0;
    for (const auto &[bits, count] : hist) {
        if (count > best_count) {
            best_count = count;
            best = bits;
        }
    }
    return best;
}

inline void write_histogram_csv(std::ostream &os, const Histogram &hist) {
    os << "bitstring,count\n";
    for (const auto &[bits, count] : hist) {
        os << bits << ',' << count << '\n';
    }
}

} // namespace qpow
