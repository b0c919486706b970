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
 * @file hashing.hpp
 * SHA3-256 (FIPS 202) and the nibble-to-angle encoding that parametrizes
 * the ansatz.
 */
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpow {

/// A 256-bit digest. Renders as 64 lowercase hex characters.
class Digest256 {
  public:
    static constexpr std::size_t kSize = 32;
    using Bytes = std::array<std::uint8_t, kSize>;

    constexpr Digest256() = default;
    explicit constexpr Digest256(const Bytes &bytes) : bytes_{bytes} {}

    /// Parses exactly 64 hex characters (either case).
    static Digest256 from_hex(std::string_view hex) {
        if (hex.size() != 2 * kSize) {
            throw std::invalid_argument("digest hex must be 64 characters, got " +
                                        std::to_string(hex.size()));
        }
        Bytes out{};
        for (std::size_t i = 0; i < kSize; ++i) {
            out[i] = static_cast<std::uint8_t>((hex_value(hex[2 * i]) << 4U) |
                                               hex_value(hex[2 * i + 1]));
        }
        return Digest256{out};
    }

    [[nodiscard]] std::string hex() const {
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string out(2 * kSize, '0');
        for (std::size_t i = 0; i < kSize; ++i) {
            out[2 * i] = kDigits[bytes_[i] >> 4U];
            out[2 * i + 1] = kDigits[bytes_[i] & 0x0FU];
        }
        return out;
    }

    /// Nibble k of the digest, k in [0, 64): high nibble of each byte first.
    [[nodiscard]] constexpr std::uint8_t nibble(std::size_t k) const {
        const std::uint8_t byte = bytes_.at(k / 2);
        return (k % 2 == 0) ? static_cast<std::uint8_t>(byte >> 4U)
                            : static_cast<std::uint8_t>(byte & 0x0FU);
    }

    [[nodiscard]] constexpr const Bytes &bytes() const noexcept {
        return bytes_;
    }
    [[nodiscard]] constexpr bool is_zero() const noexcept {
        for (auto b : bytes_) {
            if (b != 0) {
                return false;
            }
        }
        return true;
    }

    friend constexpr bool operator==(const Digest256 &,
                                     const Digest256 &) = default;

  private:
    static std::uint8_t hex_value(char c) {
        if (c >= '0' && c <= '9') {
            return static_cast<std::uint8_t>(c - '0');
        }
        if (c >= 'a' && c <= 'f') {
            return static_cast<std::uint8_t>(c - 'a' + 10);
        }
        if (c >= 'A' && c <= 'F') {
            return static_cast<std::uint8_t>(c - 'A' + 10);
        }
        throw std::invalid_argument(std::string("invalid hex character '") +
                                    c + "'");
    }

    Bytes bytes_{};
};

namespace detail {

inline constexpr std::array<std::uint64_t, 24> kKeccakRoundConstants{
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808AULL,
    0x8000000080008000ULL, 0x000000000000808BULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008AULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000AULL,
    0x000000008000808BULL, 0x800000000000008BULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800AULL, 0x800000008000000AULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

// Rotation offsets and lane permutation for the combined rho/pi step,
// walking the pi cycle starting at lane 1.
inline constexpr std::array<unsigned, 24> kKeccakRho{
    1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
    27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
inline constexpr std::array<unsigned, 24> kKeccakPi{
    10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
    15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

/// Keccak-f[1600] permutation over 25 little-endian lanes.
inline void keccak_f1600(std::array<std::uint64_t, 25> &a) noexcept {
    for (std::uint64_t rc : kKeccakRoundConstants) {
        // theta
        std::array<std::uint64_t, 5> c{};
        for (std::size_t x = 0; x < 5; ++x) {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for (std::size_t x = 0; x < 5; ++x) {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (std::size_t y = 0; y < 25; y += 5) {
                a[y + x] ^= d;
            }
        }
        // rho + pi
        std::uint64_t carry = a[1];
        for (std::size_t i = 0; i < 24; ++i) {
            const unsigned j = kKeccakPi[i];
            const std::uint64_t tmp = a[j];
            a[j] = std::rotl(carry, static_cast<int>(kKeccakRho[i]));
            carry = tmp;
        }
        // chi
        for (std::size_t y = 0; y < 25; y += 5) {
            std::array<std::uint64_t, 5> row{a[y], a[y + 1], a[y + 2],
                                             a[y + 3], a[y + 4]};
            for (std::size_t x = 0; x < 5; ++x) {
                a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
        }
        // iota
        a[0] ^= rc;
    }
}

} // namespace detail

/**
 * @brief One-shot SHA3-256 of a byte sequence.
 *
 * Sponge with rate 136 bytes, domain suffix 0x06 and final bit 0x80.
 */
[[nodiscard]] inline Digest256 sha3_256(std::span<const std::uint8_t> data) {
    constexpr std::size_t kRate = 136;
    std::array<std::uint64_t, 25> state{};

    auto absorb_block = [&state](const std::uint8_t *block) {
        for (std::size_t lane = 0; lane < kRate / 8; ++lane) {
            std::uint64_t v = 0;
            for (std::size_t b = 0; b < 8; ++b) {
                v |= static_cast<std::uint64_t>(block[8 * lane + b]) << (8 * b);
            }
            state[lane] ^= v;
        }
        detail::keccak_f1600(state);
    };

    std::size_t offset = 0;
    for (; offset + kRate <= data.size(); offset += kRate) {
        absorb_block(data.data() + offset);
    }

    std::array<std::uint8_t, kRate> last{};
    const std::size_t tail = data.size() - offset;
    for (std::size_t i = 0; i < tail; ++i) {
        last[i] = data[offset + i];
    }
    last[tail] ^= 0x06U;
    last[kRate - 1] ^= 0x80U;
    absorb_block(last.data());

    Digest256::Bytes out{};
    for (std::size_t i = 0; i < Digest256::kSize; ++i) {
        out[i] = static_cast<std::uint8_t>(state[i / 8] >> (8 * (i % 8)));
    }
    return Digest256{out};
}

[[nodiscard]] inline Digest256 sha3_256(std::string_view text) {
    return sha3_256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

/// Number of rotation angles carried by one digest (256 bits / 4 bits).
inline constexpr std::size_t kAngleCount = 64;
/// Angle granularity: a quad with value k maps to k * pi / 8.
inline constexpr double kAngleStep = std::numbers::pi / 8.0;

/**
 * @brief The 64 rotation angles decoded from a digest.
 *
 * Stored as integer levels in [0, 15] so every angle is an exact multiple
 * of pi/8.
 */
class AngleVector {
  public:
    using Levels = std::array<std::uint8_t, kAngleCount>;

    constexpr AngleVector() = default;
    explicit AngleVector(const Levels &levels) : levels_{levels} {
        for (auto l : levels_) {
            if (l > 15) {
                throw std::invalid_argument(
                    "angle level must be in [0, 15], got " + std::to_string(l));
            }
        }
    }

    [[nodiscard]] static constexpr std::size_t size() noexcept {
        return kAngleCount;
    }
    [[nodiscard]] std::uint8_t level(std::size_t i) const { return levels_.at(i); }
    [[nodiscard]] double operator[](std::size_t i) const {
        return static_cast<double>(levels_[i]) * kAngleStep;
    }
    [[nodiscard]] const Levels &levels() const noexcept { return levels_; }

    friend bool operator==(const AngleVector &, const AngleVector &) = default;

  private:
    Levels levels_{};
};

/// Nibble k of the digest becomes angle k, nibble value times pi/8.
[[nodiscard]] inline AngleVector encode_angles(const Digest256 &digest) {
    AngleVector::Levels levels{};
    for (std::size_t k = 0; k < kAngleCount; ++k) {
        levels[k] = digest.nibble(k);
    }
    return AngleVector{levels};
}

} // namespace qpow
