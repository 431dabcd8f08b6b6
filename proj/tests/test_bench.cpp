// Copyright 2026 The zxrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "support/dense_oracle.hpp"
#include "zxrw/bench.hpp"

using namespace zxrw;
using C = std::complex<double>;

TEST(GenRandom, DeterministicPerSeed) {
    auto a = gen_random_cnot_h_t(10, 200, 42);
    auto b = gen_random_cnot_h_t(10, 200, 42);
    EXPECT_EQ(write_circuit_text(a), write_circuit_text(b));
    auto c = gen_random_cnot_h_t(10, 200, 43);
    EXPECT_NE(write_circuit_text(a), write_circuit_text(c));
}

TEST(GenRandom, EmptyCircuit) {
    auto c = gen_random_cnot_h_t(3, 0, 1);
    EXPECT_TRUE(c.gates.empty());
    EXPECT_EQ(c.n_qubits, 3);
}

TEST(GenRandom, GateFrequenciesWithinThreeSigma) {
    const int n = 10000;
    auto c = gen_random_cnot_h_t(5, n, 7);
    int cnot = 0, h = 0, t = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Cnot) ++cnot;
        if (g.kind == GateKind::H) ++h;
        if (g.kind == GateKind::T) ++t;
    }
    EXPECT_EQ(cnot + h + t, n);
    auto check = [&](int got, double p) {
        double sigma = std::sqrt(n * p * (1 - p));
        EXPECT_LE(std::abs(got - n * p), 3 * sigma);
    };
    check(cnot, 0.6);
    check(h, 0.2);
    check(t, 0.2);
}

TEST(GenRandomZx, EdgeProbabilityExtremes) {
    auto d0 = gen_random_zx(12, 0.0, 5);
    EXPECT_EQ(d0.n_hadamard_edges(), 0u);
    auto g0 = UGraph::from_diagram(d0);
    EXPECT_EQ(rw_greedy_linear(g0).width(), 0u);
    EXPECT_EQ(rw_greedy_b2t(g0).width(), 0u);

    auto d1 = gen_random_zx(12, 1.0, 5);
    EXPECT_EQ(d1.n_hadamard_edges(), 66u);
    auto g1 = UGraph::from_diagram(d1);
    EXPECT_EQ(rw_greedy_linear(g1).width(), 1u);
}

TEST(GenRandomZx, EdgeCountWithinThreeSigma) {
    double total = 0;
    const int reps = 20;
    for (int s = 0; s < reps; ++s) total += static_cast<double>(gen_random_zx(30, 0.5, 100 + s).n_hadamard_edges());
    double pairs = 30.0 * 29.0 / 2.0;
    double mean = pairs * 0.5;
    double sigma = std::sqrt(pairs * 0.25 / reps);
    EXPECT_LE(std::abs(total / reps - mean), 3 * sigma);
}

TEST(GenMultiToffoli, ThreeQubitIsSevenTToffoli) {
    auto c = gen_multi_toffoli(3);
    EXPECT_EQ(c.n_qubits, 3);
    EXPECT_EQ(c.t_count(), 7u);
    auto u = testsupport::unitary_of(c);
    for (std::size_t x = 0; x < 8; ++x) {
        std::size_t y = (x == 6) ? 7 : (x == 7) ? 6 : x;
        for (std::size_t yy = 0; yy < 8; ++yy)
            EXPECT_LE(std::abs(u[yy][x] - (yy == y ? C(1, 0) : C(0, 0))), 1e-12);
    }
}

TEST(GenMultiToffoli, MatchesPermutationTimesIdentityUpToFive) {
    for (int n : {4, 5}) {
        auto c = gen_multi_toffoli(n);
        ASSERT_EQ(c.n_qubits, n + 1);
        std::size_t dim = std::size_t{1} << c.n_qubits;
        auto u = testsupport::unitary_of(c);
        std::size_t all_ones = ((std::size_t{1} << (n - 1)) - 1) << 2;  // controls set, target/borrow free
        for (std::size_t x = 0; x < dim; ++x) {
            // x = controls | target | borrow (borrow is the lowest bit).
            std::size_t controls = x >> 2;
            std::size_t y = x;
            if (controls + 1 == (std::size_t{1} << (n - 1))) y = x ^ 2;  // flip the target bit
            for (std::size_t yy = 0; yy < dim; ++yy)
                EXPECT_LE(std::abs(u[yy][x] - (yy == y ? C(1, 0) : C(0, 0))), 1e-10)
                    << "n=" << n << " x=" << x;
        }
        (void)all_ones;
    }
}

TEST(GenMultiToffoli, PermutationActionOnSampledBasisStates) {
    for (int n : {6, 8}) {
        auto c = gen_multi_toffoli(n);
        std::mt19937_64 rng(99);
        for (int it = 0; it < 6; ++it) {
            std::size_t x = rng() % (std::size_t{1} << c.n_qubits);
            auto col = testsupport::run_on_basis_state(c, x);
            std::size_t controls = x >> 2;
            std::size_t y = (controls + 1 == (std::size_t{1} << (n - 1))) ? (x ^ 2) : x;
            for (std::size_t yy = 0; yy < col.size(); ++yy)
                EXPECT_LE(std::abs(col[yy] - (yy == y ? C(1, 0) : C(0, 0))), 1e-9)
                    << "n=" << n << " x=" << x;
        }
    }
}

TEST(GenMultiToffoli, BasisRoundTripAtFour) {
    auto c = gen_multi_toffoli(4);
    for (std::size_t x = 0; x < 16; ++x) {
        // Embed the 4 logical qubits with borrow line 0 and 1.
        for (std::size_t borrow : {std::size_t{0}, std::size_t{1}}) {
            std::size_t in = (x << 1) | borrow;
            auto col = testsupport::run_on_basis_state(c, in);
            std::size_t y = (x >> 1 == 7) ? (x ^ 1) : x;
            std::size_t want = (y << 1) | borrow;
            EXPECT_LE(std::abs(col[want] - C(1, 0)), 1e-10) << "x=" << x << " borrow=" << borrow;
        }
    }
}

TEST(RunBenchmark, CsvIsDeterministicByteForByte) {
    BenchConfig cfg;
    cfg.family = "random";
    cfg.qubits = {4};
    cfg.gates = {20};
    cfg.reps = 2;
    cfg.seed = 11;
    cfg.verify = true;
    cfg.threads = 3;
    auto csv1 = bench_csv(run_benchmark(cfg));
    cfg.threads = 1;
    auto csv2 = bench_csv(run_benchmark(cfg));
    EXPECT_EQ(csv1, csv2);
    EXPECT_NE(csv1.find("family,n,params,seed,method,width,flops,verified,wall_ms"), std::string::npos);
    EXPECT_NE(csv1.find("rw-flow"), std::string::npos);
    EXPECT_NE(csv1.find("naive"), std::string::npos);
    // Verified column must be all-true for these tiny instances.
    EXPECT_EQ(csv1.find("false"), std::string::npos);
}

TEST(RunBenchmark, ZxFamilyWidthsRespectHalfBound) {
    BenchConfig cfg;
    cfg.family = "zx";
    cfg.qubits = {20};
    cfg.probs = {0.1, 0.5, 0.9};
    cfg.reps = 2;
    cfg.seed = 3;
    cfg.methods = {Method::GreedyLinear};
    auto rows = run_benchmark(cfg);
    int seen = 0;
    for (const auto& r : rows) {
        if (r.method != "rw-greedy-linear") continue;
        EXPECT_LE(r.width, 10u) << "p row " << r.params;
        ++seen;
    }
    EXPECT_EQ(seen, 6);
}

TEST(RunBenchmark, ToffoliFamilyVerifiesAgainstOracle) {
    BenchConfig cfg;
    cfg.family = "toffoli";
    cfg.qubits = {3, 4};
    cfg.verify = true;
    cfg.oracle_cap = 26;  // the reduced T-plugged 4-qubit instance has 25 spiders
    cfg.methods = {Method::GreedyLinear, Method::GreedyB2T, Method::TCount};
    auto rows = run_benchmark(cfg);
    for (const auto& r : rows) {
        if (r.method == "naive") continue;
        EXPECT_EQ(r.verified, "true") << r.method << " n=" << r.n;
    }
}

TEST(RunBenchmark, FlowOnZxFamilyIsRecordedAsError) {
    BenchConfig cfg;
    cfg.family = "zx";
    cfg.qubits = {8};
    cfg.probs = {0.5};
    cfg.reps = 1;
    cfg.methods = {Method::Flow};
    auto rows = run_benchmark(cfg);
    ASSERT_GE(rows.size(), 1u);
    EXPECT_EQ(rows[0].verified, "error:GFlowUnavailable");
}
