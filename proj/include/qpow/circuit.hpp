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
 * @file circuit.hpp
 * Gate lists and the layered RX/RZ + all-to-all CRX ansatz.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hashing.hpp"

namespace qpow {

enum class GateKind : std::uint8_t { RX, RZ, CRX };

[[nodiscard]] constexpr std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CRX:
        return "CRX";
    }
    return "?";
}

struct Gate {
    GateKind kind{GateKind::RX};
    std::size_t target{0};
    std::optional<std::size_t> control{};
    double angle{0.0};

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Ordered gate sequence acting on n_qubits. Immutable once constructed.
class Circuit {
  public:
    Circuit(std::size_t n_qubits, std::vector<Gate> gates)
        : n_qubits_{n_qubits}, gates_{std::move(gates)} {
        if (n_qubits_ == 0) {
            throw std::invalid_argument("circuit needs at least one qubit");
        }
        for (std::size_t i = 0; i < gates_.size(); ++i) {
            validate(gates_[i], i);
        }
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    void validate(const Gate &g, std::size_t index) const {
        auto fail = [index](const std::string &what) {
            throw std::invalid_argument("gate " + std::to_string(index) + ": " +
                                        what);
        };
        if (g.target >= n_qubits_) {
            fail("target qubit out of range");
        }
        if (g.kind == GateKind::CRX) {
            if (!g.control) {
                fail("CRX requires a control qubit");
            }
            if (*g.control >= n_qubits_) {
                fail("control qubit out of range");
            }
            if (*g.control == g.target) {
                fail("control and target coincide");
            }
        } else if (g.control) {
            fail("single-qubit gate carries a control");
        }
    }

    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

inline constexpr std::size_t kMinAnsatzQubits = 2;
inline constexpr std::size_t kMaxAnsatzQubits = 30;

/**
 * @brief Builds the ansatz consuming the 64 angles in order.
 *
 * Each layer is RX(q), RZ(q) for q = 0..n-1, followed by CRX(c -> t) for
 * c = n-1 down to 0 and every t != c ascending. Layers repeat until the
 * angles run out; the last layer is cut wherever angle 63 lands.
 */
[[nodiscard]] inline Circuit
build_ansatz(const AngleVector &angles, std::size_t n_qubits,
             std::size_t max_qubits = kMaxAnsatzQubits) {
    if (n_qubits < kMinAnsatzQubits || n_qubits > max_qubits) {
        throw std::invalid_argument(
            "ansatz qubit count must be in [" +
            std::to_string(kMinAnsatzQubits) + ", " +
            std::to_string(max_qubits) + "], got " + std::to_string(n_qubits));
    }

    std::vector<Gate> gates;
    gates.reserve(kAngleCount);
    std::size_t next = 0;
    auto emit = [&](GateKind kind, std::size_t target,
                    std::optional<std::size_t> control) {
        if (next < kAngleCount) {
            gates.push_back(Gate{kind, target, control, angles[next++]});
        }
    };

    while (next < kAngleCount) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            emit(GateKind::RX, q, std::nullopt);
            emit(GateKind::RZ, q, std::nullopt);
        }
        for (std::size_t c = n_qubits; c-- > 0;) {
            for (std::size_t t = 0; t < n_qubits; ++t) {
                if (t != c) {
                    emit(GateKind::CRX, t, c);
                }
            }
        }
    }
    return Circuit{n_qubits, std::move(gates)};
}

[[nodiscard]] inline std::size_t count_two_qubit_gates(const Circuit &circuit) {
    std::size_t count = 0;
    for (const auto &g : circuit.gates()) {
        if (g.kind == GateKind::CRX) {
            ++count;
        }
    }
    return count;
}

/**
 * @brief Text dump, one gate per line: `KIND control target k` where the
 * angle is k * pi/8 and control is `-` for single-qubit gates.
 */
[[nodiscard]] inline std::string dump_circuit(const Circuit &circuit) {
    std::ostringstream os;
    os << "# qubits " << circuit.n_qubits() << '\n';
    for (const auto &g : circuit.gates()) {
        os << to_string(g.kind) << ' ';
        if (g.control) {
            os << *g.control;
        } else {
            os << '-';
        }
        os << ' ' << g.target << ' ';
        const double multiple = g.angle / kAngleStep;
        const double rounded = std::round(multiple);
        if (std::abs(multiple - rounded) < 1e-9) {
            os << static_cast<long long>(rounded);
        } else {
            os << std::setprecision(17) << multiple;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace qpow
