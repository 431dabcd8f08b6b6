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

#include <random>

#include "support/dense_oracle.hpp"
#include "zxrw/gflow.hpp"
#include "zxrw/heuristics.hpp"
#include "zxrw/simplify.hpp"

using namespace zxrw;

namespace {

OpenGraph path3_open() {
    OpenGraph og;
    og.g = UGraph::empty(3);
    og.g.add_edge(0, 1);
    og.g.add_edge(1, 2);
    og.inputs = Bitset(3);
    og.inputs.set(0);
    og.outputs = Bitset(3);
    og.outputs.set(2);
    return og;
}

}  // namespace

TEST(OddNeighbourhood, Examples) {
    UGraph path = UGraph::empty(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_TRUE(odd_neighbourhood(path, Bitset(3)).none());
    Bitset s(3);
    s.set(1);
    auto odd = odd_neighbourhood(path, s);
    EXPECT_TRUE(odd.test(0) && !odd.test(1) && odd.test(2));

    UGraph tri = UGraph::empty(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    Bitset s2(3);
    s2.set(0);
    s2.set(1);
    auto odd2 = odd_neighbourhood(tri, s2);
    EXPECT_TRUE(odd2.test(0) && odd2.test(1) && !odd2.test(2));
}

TEST(FindGFlow, PathGraph) {
    auto og = path3_open();
    auto f = find_gflow(og);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(verify_gflow(og, *f));
    // g(0) = {1}, g(1) = {2}, 0 before 1.
    EXPECT_TRUE(f->g[0].test(1) && f->g[0].count() == 1);
    EXPECT_TRUE(f->g[1].test(2) && f->g[1].count() == 1);
    EXPECT_LT(f->layer[0], f->layer[1]);
}

TEST(FindGFlow, AllOutputsIsTrivial) {
    OpenGraph og;
    og.g = UGraph::empty(4);
    og.g.add_edge(0, 1);
    og.g.add_edge(2, 3);
    og.inputs = Bitset(4);
    og.outputs = Bitset(4);
    for (std::size_t v = 0; v < 4; ++v) og.outputs.set(v);
    auto f = find_gflow(og);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(verify_gflow(og, *f));
}

TEST(FindGFlow, ClosedGraphWithXYVertexHasNone) {
    OpenGraph og;
    og.g = UGraph::empty(2);
    og.g.add_edge(0, 1);
    og.inputs = Bitset(2);
    og.outputs = Bitset(2);
    EXPECT_FALSE(find_gflow(og).has_value());
}

TEST(FindGFlow, ReducedCircuitDiagramsAlwaysHaveGFlow) {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto c = testsupport::random_circuit(n, 2 * n * n, rng);
        auto d = circuit_to_diagram(c);
        full_reduce(d);
        auto gf = find_gflow_for_diagram(d);
        ASSERT_TRUE(gf.has_value()) << "iter " << it;
        GFlowViolation v;
        EXPECT_TRUE(verify_gflow(gf->og, gf->flow, &v))
            << "iter " << it << " vertex " << v.vertex << " cond " << v.condition;
    }
}

TEST(VerifyGFlow, EmptyDomainIsTrue) {
    OpenGraph og;
    og.g = UGraph::empty(0);
    og.inputs = Bitset(0);
    og.outputs = Bitset(0);
    ExtendedGFlow f;
    EXPECT_TRUE(verify_gflow(og, f));
}

TEST(VerifyGFlow, TamperingIsDetected) {
    std::mt19937_64 rng(31415);
    int tampered = 0;
    for (int it = 0; it < 60 && tampered < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto c = testsupport::random_circuit(n, n * n, rng);
        auto d = circuit_to_diagram(c);
        full_reduce(d);
        auto gf = find_gflow_for_diagram(d);
        ASSERT_TRUE(gf.has_value());
        const auto& og = gf->og;
        const auto& f = gf->flow;
        // Drop one element from some correction set with >= 2 elements.
        for (std::size_t v = 0; v < og.g.n; ++v) {
            if (og.outputs.test(v) || f.g[v].count() < 2) continue;
            auto mutated = f;
            std::size_t drop = mutated.g[v].to_indices()[rng() % mutated.g[v].count()];
            mutated.g[v].reset(drop);
            GFlowViolation viol;
            bool ok = verify_gflow(og, mutated, &viol);
            if (!ok) {
                EXPECT_GE(viol.condition, 1);
                EXPECT_LE(viol.condition, 5);
                ++tampered;
            }
            break;
        }
    }
    EXPECT_GE(tampered, 10);
}

TEST(RwFlow, PathExample) {
    auto og = path3_open();
    auto f = find_gflow(og);
    ASSERT_TRUE(f.has_value());
    auto p = rw_flow(og, *f);
    EXPECT_EQ(p.order, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(p.width(), 1u);
    EXPECT_LE(p.width(), og.outputs.count());
}

TEST(RwFlow, AllOutputGraphTrivialBound) {
    OpenGraph og;
    og.g = UGraph::empty(3);
    og.g.add_edge(0, 1);
    og.inputs = Bitset(3);
    og.outputs = Bitset(3);
    for (std::size_t v = 0; v < 3; ++v) og.outputs.set(v);
    auto f = find_gflow(og);
    ASSERT_TRUE(f.has_value());
    auto p = rw_flow(og, *f);
    EXPECT_LE(p.width(), og.outputs.count());
}

TEST(RwFlow, WidthNeverExceedsOutputsOnReducedCircuits) {
    std::mt19937_64 rng(161803);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6 qubits
        auto c = testsupport::random_circuit(n, 2 * n * n, rng);
        auto d = circuit_to_diagram(c);
        full_reduce(d);
        auto gf = find_gflow_for_diagram(d);
        ASSERT_TRUE(gf.has_value());
        const auto& og = gf->og;
        auto p = rw_flow(og, gf->flow);
        // Lemma-style bound, checked by independent recomputation of ranks.
        auto fresh = make_linear_order(og.g, p.order);
        EXPECT_EQ(fresh.ranks, p.ranks);
        EXPECT_LE(fresh.width(), og.outputs.count()) << "iter " << it;
        EXPECT_LE(fresh.width(), static_cast<std::size_t>(n)) << "iter " << it;
    }
}

TEST(RwFlow, RejectsInvalidGFlow) {
    auto og = path3_open();
    auto f = find_gflow(og);
    ASSERT_TRUE(f.has_value());
    auto bad = *f;
    bad.layer[0] = 99;  // breaks condition 1 for g(0)
    try {
        (void)rw_flow(og, bad);
        FAIL() << "expected InvalidGFlow";
    } catch (const ZxError& e) {
        EXPECT_EQ(e.code(), Err::InvalidGFlow);
    }
}
