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
 * @file random.hpp
 * Seeded, platform-independent random sources used by sampling, noise
 * emulation and nonce search.
 */
#pragma once

#include <cstdint>
#include <random>

namespace qpow {

/// Seed used by every CLI workflow unless --seed overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20220128;

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/**
 * @brief Sequential generator on top of std::mt19937_64.
 *
 * The standard distributions are implementation-defined, so the mapping
 * from raw engine output to integers and reals is done here to keep runs
 * bit-identical across standard libraries.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_{seed} {}

    std::uint64_t next_u64() { return engine_(); }

    std::uint32_t next_u32() {
        return static_cast<std::uint32_t>(engine_() >> 32U);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire-style rejection keeps the draw unbiased.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

  private:
    std::mt19937_64 engine_;
};

/**
 * @brief Counter-based stream of 32-bit nonces.
 *
 * nonce(i) depends only on (seed, i), so a search split across workers
 * can agree on which attempt came first.
 */
class NonceStream {
  public:
    explicit NonceStream(std::uint64_t seed = kDefaultSeed) : seed_{seed} {}

    [[nodiscard]] std::uint32_t nonce(std::uint64_t attempt) const noexcept {
        return static_cast<std::uint32_t>(
            splitmix64(splitmix64(seed_) + attempt) >> 32U);
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
};

} // namespace qpow
