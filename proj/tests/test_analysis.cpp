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
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "qpow/analysis.hpp"

using namespace qpow;

namespace {
AdvantageModel error_free() {
    AdvantageModel m;
    m.noise.e_cnot = 0.0;
    m.noise.e_readout = 0.0;
    return m;
}
} // namespace

TEST_CASE("runtime fits evaluate directly", "[analysis]") {
    CHECK(classical_time(15) == Catch::Approx(0.8912509381337459).epsilon(1e-12));
    CHECK(classical_time(20) == Catch::Approx(39.81071705534978).epsilon(1e-12));
    CHECK(classical_time(0) == Catch::Approx(1e-5).epsilon(1e-12));
    CHECK(quantum_time(20) == Catch::Approx(39.7).epsilon(1e-12));
    CHECK(quantum_time(0) == 7.5);
    CHECK(quantum_time(30) == Catch::Approx(76.8).epsilon(1e-12));
}

TEST_CASE("advantage is speed ratio times accuracy", "[analysis]") {
    const AdvantageModel m;
    for (std::size_t n = 2; n <= 60; ++n) {
        const double recomposed =
            (classical_time(static_cast<double>(n)) /
             quantum_time(static_cast<double>(n))) *
            accuracy_estimate(n, static_cast<double>(n * n - n), m.noise);
        CHECK(advantage(n, m) == Catch::Approx(recomposed).epsilon(1e-14));
        CHECK(advantage(n, error_free()) == Catch::Approx(speed_ratio(n)).epsilon(1e-14));
    }
    CHECK(advantage(20, m) == Catch::Approx(0.014692813098951547).epsilon(1e-9));
    CHECK(speed_ratio(20) == Catch::Approx(1.0).margin(0.01));
    CHECK_THROWS_AS(advantage(1, m), std::invalid_argument);
}

TEST_CASE("speed ratio rises and accuracy falls with n", "[analysis][property]") {
    const AdvantageModel m;
    for (std::size_t n = 2; n < 200; ++n) {
        CHECK(speed_ratio(n + 1, m) > speed_ratio(n, m));
        CHECK(model_accuracy(n + 1, m) < model_accuracy(n, m));
    }
}

TEST_CASE("find_crossover", "[analysis]") {
    const AdvantageModel m;
    const auto speed = find_crossover(m, CrossoverCriterion::SpeedRatio);
    REQUIRE(speed.n.has_value());
    CHECK(*speed.n == 20);
    CHECK(speed_ratio(19, m) < 1.0);

    // With 1%/2% errors and n^2 - n gates the product never reaches 1.
    const auto adv = find_crossover(m, CrossoverCriterion::Advantage);
    CHECK_FALSE(adv.n.has_value());
    CHECK(adv.best_n == 35);
    CHECK(adv.best_value == Catch::Approx(0.11122341860924118).epsilon(1e-9));

    const auto ideal = find_crossover(error_free(), CrossoverCriterion::Advantage);
    REQUIRE(ideal.n.has_value());
    CHECK(*ideal.n == 20);

    CHECK_FALSE(find_crossover(m, CrossoverCriterion::SpeedRatio, 19).n.has_value());
    CHECK_THROWS_AS(find_crossover(m, CrossoverCriterion::SpeedRatio, 201),
                    std::invalid_argument);
}

TEST_CASE("log10 fit recovers a synthetic slope", "[analysis]") {
    std::vector<BenchRecord> records;
    for (std::size_t n = 2; n <= 22; ++n) {
        // Steeper below the window so the window matters.
        const double slope = n >= 15 ? 0.3 : 0.05;
        records.push_back({n, std::pow(10.0, slope * static_cast<double>(n) - 4), 1});
    }
    const auto fit = fit_log10_time(records, 15);
    CHECK(fit.slope == Catch::Approx(0.3).epsilon(1e-12));
    CHECK(fit.intercept == Catch::Approx(-4.0).epsilon(1e-12));
    // Fit is a pure function of the records.
    CHECK(fit_log10_time(records, 15).slope == fit.slope);

    // Window empty: falls back to every record.
    const std::vector<BenchRecord> small{{2, 1e-3, 1}, {4, 4e-3, 1}};
    CHECK(fit_log10_time(small, 15).slope ==
          Catch::Approx(std::log10(4.0) / 2).epsilon(1e-12));

    CHECK_THROWS_AS(fit_log10_time(std::vector<BenchRecord>{{2, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_log10_time(std::vector<BenchRecord>{{2, 0, 1}, {3, 1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("bench smoke run", "[analysis][bench]") {
    BenchOptions opts;
    opts.n_min = 2;
    opts.n_max = 2;
    opts.repetitions = 1;
    for (int i = 0; i < 2; ++i) {
        const auto r = bench_simulator(opts);
        REQUIRE(r.records.size() == 1);
        CHECK(r.records[0].wall_time_s > 0.0);
        CHECK(std::isfinite(r.records[0].wall_time_s));
        CHECK(r.records[0].repetitions == 1);
    }
    opts.n_max = 6;
    opts.repetitions = 3;
    const auto r = bench_simulator(opts);
    CHECK(r.records.size() == 5);
    CHECK(std::isfinite(r.fit.slope));

    opts.n_min = 1;
    CHECK_THROWS_AS(bench_simulator(opts), std::invalid_argument);
    opts.n_min = 2;
    opts.repetitions = 0;
    CHECK_THROWS_AS(bench_simulator(opts), std::invalid_argument);
}

TEST_CASE("CSV formats", "[analysis]") {
    std::ostringstream adv;
    write_advantage_csv(adv, AdvantageModel{}, 19, 21);
    std::istringstream lines(adv.str());
    std::string header, row19, row20;
    std::getline(lines, header);
    std::getline(lines, row19);
    std::getline(lines, row20);
    CHECK(header ==
          "n,classical_time_model,quantum_time_model,speed_ratio,accuracy,advantage");
    CHECK(row20.rfind("20,39.81071706,39.7,1.002788843,", 0) == 0);
    CHECK_THROWS_AS(write_advantage_csv(adv, AdvantageModel{}, 5, 4),
                    std::invalid_argument);

    std::ostringstream bench;
    const std::vector<BenchRecord> recs{{3, 0.5, 2}};
    write_bench_csv(bench, recs);
    CHECK(bench.str() == "n,wall_time_s,reps\n3,0.5,2\n");
}
