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
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <catch_amalgamated.hpp>

#include "qpow/circuit.hpp"
#include "qpow/random.hpp"

using namespace qpow;

namespace {

AngleVector random_angles(Rng &rng) {
    AngleVector::Levels levels{};
    for (auto &l : levels) {
        l = static_cast<std::uint8_t>(rng.below(16));
    }
    return AngleVector{levels};
}

AngleVector ramp_angles() {
    AngleVector::Levels levels{};
    for (std::size_t i = 0; i < levels.size(); ++i) {
        levels[i] = static_cast<std::uint8_t>(i % 16);
    }
    return AngleVector{levels};
}

} // namespace

TEST_CASE("ansatz for 4 qubits has 3 full layers plus 4 rotations",
          "[circuit]") {
    const auto c = build_ansatz(ramp_angles(), 4);
    REQUIRE(c.gates().size() == 64);
    CHECK(count_two_qubit_gates(c) == 36);

    // First layer: RX/RZ pairs on qubits 0..3.
    for (std::size_t q = 0; q < 4; ++q) {
        CHECK(c.gates()[2 * q].kind == GateKind::RX);
        CHECK(c.gates()[2 * q + 1].kind == GateKind::RZ);
        CHECK(c.gates()[2 * q].target == q);
    }
    // Entangling sub-layer starts at control 3, targets ascending.
    CHECK(c.gates()[8] == Gate{GateKind::CRX, 0, 3, c.gates()[8].angle});
    CHECK(c.gates()[9].target == 1);
    CHECK(c.gates()[10].target == 2);
    CHECK(c.gates()[11].control == std::optional<std::size_t>{2});
    CHECK(c.gates()[19].control == std::optional<std::size_t>{0});
    CHECK(c.gates()[19].target == 3);
    // Tail: RX(0), RZ(0), RX(1), RZ(1).
    using K = GateKind;
    const std::vector<std::tuple<K, std::size_t>> tail{
        {K::RX, 0}, {K::RZ, 0}, {K::RX, 1}, {K::RZ, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c.gates()[60 + i].kind == std::get<0>(tail[i]));
        CHECK(c.gates()[60 + i].target == std::get<1>(tail[i]));
    }
}

TEST_CASE("angle i lands on gate i", "[circuit]") {
    const auto angles = ramp_angles();
    for (std::size_t n : {2U, 3U, 4U, 7U, 30U}) {
        const auto c = build_ansatz(angles, n);
        REQUIRE(c.gates().size() == 64);
        for (std::size_t i = 0; i < 64; ++i) {
            REQUIRE(c.gates()[i].angle == angles[i]);
        }
    }
}

TEST_CASE("CRX counts match an enumeration of the emission rule",
          "[circuit]") {
    // Counts from a standalone script enumerating the layer rule and cutting
    // at 64 gates.
    const std::map<std::size_t, std::size_t> expected{
        {2, 20}, {3, 30}, {4, 36},  {5, 40},  {6, 40},  {7, 42},
        {8, 48}, {9, 46}, {10, 44}, {16, 32}, {20, 24}, {30, 4}};
    for (const auto &[n, crx] : expected) {
        CHECK(count_two_qubit_gates(build_ansatz(AngleVector{}, n)) == crx);
    }
}

TEST_CASE("per-layer entangling count is n^2 - n", "[circuit]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto c = build_ansatz(AngleVector{}, n);
        std::size_t crx_in_first_layer = 0;
        for (std::size_t i = 2 * n; i < c.gates().size(); ++i) {
            if (c.gates()[i].kind != GateKind::CRX) {
                break;
            }
            ++crx_in_first_layer;
        }
        CHECK(crx_in_first_layer == n * n - n);
    }
}

TEST_CASE("all-zero angles give all-zero gates", "[circuit]") {
    for (const auto &g : build_ansatz(AngleVector{}, 3).gates()) {
        CHECK(g.angle == 0.0);
    }
}

TEST_CASE("build_ansatz is deterministic and validates", "[circuit]") {
    Rng rng{11};
    for (int i = 0; i < 20; ++i) {
        const auto a = random_angles(rng);
        CHECK(build_ansatz(a, 4) == build_ansatz(a, 4));
    }
    CHECK_THROWS_AS(build_ansatz(AngleVector{}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_ansatz(AngleVector{}, 31), std::invalid_argument);
    CHECK_NOTHROW(build_ansatz(AngleVector{}, 12, 12));
    CHECK_THROWS_AS(build_ansatz(AngleVector{}, 13, 12), std::invalid_argument);
}

TEST_CASE("Circuit rejects malformed gates", "[circuit]") {
    CHECK(count_two_qubit_gates(Circuit{2, {}}) == 0);
    CHECK_THROWS_AS((Circuit{2, {Gate{GateKind::RX, 2, std::nullopt, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((Circuit{2, {Gate{GateKind::CRX, 1, std::nullopt, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((Circuit{2, {Gate{GateKind::CRX, 1, 1, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((Circuit{2, {Gate{GateKind::RZ, 1, 0, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((Circuit{0, {}}), std::invalid_argument);
}

TEST_CASE("circuit dump lists one gate per line", "[circuit]") {
    const auto dump = dump_circuit(build_ansatz(ramp_angles(), 2));
    CHECK(dump.rfind("# qubits 2\nRX - 0 0\nRZ - 0 1\nRX - 1 2\nRZ - 1 3\n"
                     "CRX 1 0 4\nCRX 0 1 5\n",
                     0) == 0);
    std::size_t lines = 0;
    for (char ch : dump) {
        lines += ch == '\n' ? 1 : 0;
    }
    CHECK(lines == 65);
}
