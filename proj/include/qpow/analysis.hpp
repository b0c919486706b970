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
 * @file analysis.hpp
 * Runtime-fit advantage model and a wall-clock benchmark of the simulator.
 *
 * Model times are dimensionless relative units; only their ratio matters.
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "hashing.hpp"
#include "noise.hpp"
#include "random.hpp"
#include "statevector.hpp"

namespace qpow {

/// log10 t = slope * n + intercept
struct ClassicalFit {
    double slope{0.33};
    double intercept{-5.0};
};

/// t = scale * (n^2 + linear * n) + offset
struct QuantumFit {
    double scale{0.07};
    double linear{3.0};
    double offset{7.5};
};

struct AdvantageModel {
    ClassicalFit classical{};
    QuantumFit quantum{};
    NoiseParams noise{};
};

[[nodiscard]] inline double classical_time(double n,
                                           const ClassicalFit &fit = {}) {
    return std::pow(10.0, fit.slope * n + fit.intercept);
}

[[nodiscard]] inline double quantum_time(double n, const QuantumFit &fit = {}) {
    return fit.scale * (n * n + fit.linear * n) + fit.offset;
}

/// Non-transpiled all-to-all two-qubit gate count.
[[nodiscard]] constexpr std::size_t ideal_cnot_count(std::size_t n) noexcept {
    return n * n - n;
}

[[nodiscard]] inline double speed_ratio(std::size_t n,
                                        const AdvantageModel &m = {}) {
    const auto x = static_cast<double>(n);
    return classical_time(x, m.classical) / quantum_time(x, m.quantum);
}

[[nodiscard]] inline double model_accuracy(std::size_t n,
                                           const AdvantageModel &m = {}) {
    return accuracy_estimate(n, static_cast<double>(ideal_cnot_count(n)),
                             m.noise);
}

[[nodiscard]] inline double advantage(std::size_t n,
                                      const AdvantageModel &m = {}) {
    if (n < 2) {
        throw std::invalid_argument("advantage model is defined for n >= 2");
    }
    return speed_ratio(n, m) * model_accuracy(n, m);
}

enum class CrossoverCriterion { SpeedRatio, Advantage };

struct CrossoverResult {
    std::optional<std::size_t> n;
    std::size_t best_n{0};
    double best_value{0.0};
};

/// Smallest integer n in [2, n_max] whose criterion value reaches 1.
[[nodiscard]] inline CrossoverResult
find_crossover(const AdvantageModel &m, CrossoverCriterion criterion,
               std::size_t n_max = 200) {
    if (n_max < 2 || n_max > 200) {
        throw std::invalid_argument("n_max must be in [2, 200]");
    }
    CrossoverResult r;
    r.best_value = -1.0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double v = criterion == CrossoverCriterion::SpeedRatio
                             ? speed_ratio(n, m)
                             : advantage(n, m);
        if (v > r.best_value) {
            r.best_value = v;
            r.best_n = n;
        }
        if (v >= 1.0) {
            r.n = n;
            r.best_n = n;
            r.best_value = v;
            return r;
        }
    }
    return r;
}

inline void write_advantage_csv(std::ostream &os, const AdvantageModel &m,
                                std::size_t n_min, std::size_t n_max) {
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("advantage sweep needs 2 <= min <= max");
    }
    os << "n,classical_time_model,quantum_time_model,speed_ratio,accuracy,"
          "advantage\n";
    const auto old_precision = os.precision(10);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const auto x = static_cast<double>(n);
        os << n << ',' << classical_time(x, m.classical) << ','
           << quantum_time(x, m.quantum) << ',' << speed_ratio(n, m) << ','
           << model_accuracy(n, m) << ',' << advantage(n, m) << '\n';
    }
    os.precision(old_precision);
}

struct BenchRecord {
    std::size_t n_qubits{0};
    double wall_time_s{0.0}; // median over repetitions
    std::size_t repetitions{1};
};

struct LinearFit {
    double slope{0.0};
    double intercept{0.0};
};

/// Least-squares line through (n, log10 t) for records with n >= fit_min_n;
/// falls back to all records when fewer than two fall inside the window.
[[nodiscard]] inline LinearFit fit_log10_time(std::span<const BenchRecord> records,
                                              std::size_t fit_min_n = 15) {
    std::vector<const BenchRecord *> window;
    for (const auto &r : records) {
        if (r.n_qubits >= fit_min_n) {
            window.push_back(&r);
        }
    }
    if (window.size() < 2) {
        window.clear();
        for (const auto &r : records) {
            window.push_back(&r);
        }
    }
    if (window.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two records");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto *r : window) {
        if (!(r->wall_time_s > 0.0)) {
            throw std::invalid_argument("wall times must be positive");
        }
        const auto x = static_cast<double>(r->n_qubits);
        const double y = std::log10(r->wall_time_s);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto k = static_cast<double>(window.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0.0) {
        throw std::invalid_argument("slope fit needs two distinct n values");
    }
    LinearFit fit;
    fit.slope = (k * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

struct BenchOptions {
    std::size_t n_min{2};
    std::size_t n_max{10};
    std::size_t repetitions{3};
    std::uint64_t seed{kDefaultSeed};
    std::size_t fit_min_n{15};
};

struct BenchResult {
    std::vector<BenchRecord> records;
    LinearFit fit;
};

/**
 * @brief Times ansatz construction + simulation + argmax from a random
 * digest, for every n in [n_min, n_max]; reports the median per n.
 */
[[nodiscard]] inline BenchResult bench_simulator(const BenchOptions &opts) {
    if (opts.n_min < kMinAnsatzQubits || opts.n_max < opts.n_min ||
        opts.n_max > kMaxAnsatzQubits) {
        throw std::invalid_argument("bench qubit range must satisfy 2 <= min "
                                    "<= max <= 30");
    }
    if (opts.repetitions == 0) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    Rng rng{opts.seed};
    BenchResult result;
    std::uint64_t sink = 0;
    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
        std::vector<double> times;
        times.reserve(opts.repetitions);
        for (std::size_t r = 0; r < opts.repetitions; ++r) {
            Digest256::Bytes bytes{};
            for (auto &b : bytes) {
                b = static_cast<std::uint8_t>(rng.next_u32() >> 24U);
            }
            const auto start = std::chrono::steady_clock::now();
            const auto state =
                simulate(build_ansatz(encode_angles(Digest256{bytes}), n));
            sink += most_probable_state(state).index;
            const std::chrono::duration<double> dt =
                std::chrono::steady_clock::now() - start;
            // Clock granularity floor keeps log10 finite.
            times.push_back(std::max(dt.count(), 1e-9));
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median = times.size() % 2 == 1
                                  ? times[mid]
                                  : 0.5 * (times[mid - 1] + times[mid]);
        result.records.push_back({n, median, opts.repetitions});
    }
    static_cast<void>(sink);
    if (result.records.size() >= 2) {
        result.fit = fit_log10_time(result.records, opts.fit_min_n);
    }
    return result;
}

inline void write_bench_csv(std::ostream &os,
                            std::span<const BenchRecord> records) {
    os << "n,wall_time_s,reps\n";
    const auto old_precision = os.precision(9);
    for (const auto &r : records) {
        os << r.n_qubits << ',' << r.wall_time_s << ',' << r.repetitions << '\n';
    }
    os.precision(old_precision);
}

} // namespace qpow
