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

#include <complex>
#include <random>

#include "support/dense_oracle.hpp"
#include "zxrw/json_io.hpp"
#include "zxrw/oracle.hpp"
#include "zxrw/plug.hpp"
#include "zxrw/simplify.hpp"

using namespace zxrw;
using C = std::complex<double>;

namespace {

void expect_close(C a, C b, double tol, const std::string& what = "") {
    double scale = std::max(1.0, std::abs(b));
    EXPECT_LE(std::abs(a - b), tol * scale) << what << " got " << a << " want " << b;
}

ZxDiagram random_closed_diagram(std::mt19937_64& rng, int n, double p, bool clifford_t = true) {
    ZxDiagram d;
    std::vector<Vid> vs;
    for (int i = 0; i < n; ++i) {
        Phase ph = clifford_t ? Phase::pi4(static_cast<int>(rng() % 8))
                              : Phase::radians(static_cast<double>(rng() % 1000) / 1000.0 * 6.28);
        vs.push_back(d.add_vertex(VKind::ZSpider, ph));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() % 1000) / 1000.0 < p)
                d.add_edge(vs[i], vs[j], EdgeKind::Hadamard);
    return d;
}

}  // namespace

TEST(ToGraphLike, AlreadyGraphLikeUnchanged) {
    std::mt19937_64 rng(1);
    auto d = random_closed_diagram(rng, 8, 0.4);
    auto before = diagram_to_json_string(d);
    to_graph_like(d);
    EXPECT_EQ(diagram_to_json_string(d), before);
}

TEST(ToGraphLike, PlainEdgeFusesSpiders) {
    ZxDiagram d;
    Vid a = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    Vid b = d.add_vertex(VKind::ZSpider, Phase::pi4(2));
    Vid c = d.add_vertex(VKind::ZSpider, Phase::pi4(4));
    d.add_edge(a, b, EdgeKind::Plain);
    d.add_edge(b, c, EdgeKind::Hadamard);
    C before = oracle_scalar(d);
    to_graph_like(d);
    EXPECT_EQ(d.n_spiders(), 2u);
    EXPECT_TRUE(d.alive(a));
    EXPECT_FALSE(d.alive(b));
    EXPECT_EQ(d.phase(a), Phase::pi4(3));
    expect_close(oracle_scalar(d), before, 1e-12);
}

TEST(ToGraphLike, FusionTriangleCreatesParallelCancellation) {
    // a -plain- b, both joined to c by Hadamard edges: fusing a,b makes the
    // pair of Hadamard edges cancel against 1/2.
    ZxDiagram d;
    Vid a = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    Vid b = d.add_vertex(VKind::ZSpider, Phase::pi4(7));
    Vid c = d.add_vertex(VKind::ZSpider, Phase::pi4(3));
    d.add_edge(a, b, EdgeKind::Plain);
    d.add_edge(a, c, EdgeKind::Hadamard);
    d.add_edge(b, c, EdgeKind::Hadamard);
    C before = oracle_scalar(d);
    to_graph_like(d);
    EXPECT_EQ(d.n_spiders(), 2u);
    EXPECT_FALSE(d.has_edge(a, c));
    expect_close(oracle_scalar(d), before, 1e-12);
}

TEST(LocalComplement, IsolatedProperCliffordSpider) {
    for (int k : {2, 6}) {
        ZxDiagram d;
        Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(k));
        local_complement(d, v);
        EXPECT_EQ(d.n_spiders(), 0u);
        C want = C(1, 0) + Phase::pi4(k).unit();
        expect_close(d.scalar().to_complex(), want, 1e-12);
    }
}

TEST(LocalComplement, TwoNeighborsToggleEdge) {
    // pi/2 spider with two neighbours: the edge between the neighbours
    // toggles; value is preserved.
    for (bool edge_present : {false, true}) {
        ZxDiagram d;
        Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(2));
        Vid a = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
        Vid b = d.add_vertex(VKind::ZSpider, Phase::pi4(5));
        d.add_edge(v, a, EdgeKind::Hadamard);
        d.add_edge(v, b, EdgeKind::Hadamard);
        if (edge_present) d.add_edge(a, b, EdgeKind::Hadamard);
        C before = oracle_scalar(d);
        local_complement(d, v);
        EXPECT_EQ(d.has_hadamard_edge(a, b), !edge_present);
        expect_close(oracle_scalar(d), before, 1e-12, "lcomp 2-neighbour");
    }
}

TEST(LocalComplement, TriangleRemovesOppositeEdge) {
    ZxDiagram d;
    Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(6));
    Vid a = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    Vid b = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    d.add_edge(v, a, EdgeKind::Hadamard);
    d.add_edge(v, b, EdgeKind::Hadamard);
    d.add_edge(a, b, EdgeKind::Hadamard);
    C before = oracle_scalar(d);
    local_complement(d, v);
    EXPECT_FALSE(d.has_hadamard_edge(a, b));
    expect_close(oracle_scalar(d), before, 1e-12, "lcomp triangle");
}

TEST(LocalComplement, RejectsNonProperClifford) {
    ZxDiagram d;
    Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    try {
        local_complement(d, v);
        FAIL() << "expected NotProperClifford";
    } catch (const ZxError& e) {
        EXPECT_EQ(e.code(), Err::NotProperClifford);
    }
}

TEST(Pivot, LonePauliPairReducesToScalar) {
    ZxDiagram d;
    Vid u = d.add_vertex(VKind::ZSpider, Phase::pi4(0));
    Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(0));
    d.add_edge(u, v, EdgeKind::Hadamard);
    C before = oracle_scalar(d);
    pivot(d, u, v);
    EXPECT_EQ(d.n_spiders(), 0u);
    expect_close(d.scalar().to_complex(), before, 1e-12);
    EXPECT_NEAR(std::abs(before - C(std::sqrt(2.0), 0)), 0.0, 1e-12);
}

TEST(Pivot, FourCyclePreservesOracle) {
    for (int pu : {0, 4})
        for (int pv : {0, 4}) {
            ZxDiagram d;
            Vid u = d.add_vertex(VKind::ZSpider, Phase::pi4(pu));
            Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(pv));
            Vid a = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
            Vid b = d.add_vertex(VKind::ZSpider, Phase::pi4(3));
            d.add_edge(u, v, EdgeKind::Hadamard);
            d.add_edge(v, a, EdgeKind::Hadamard);
            d.add_edge(a, b, EdgeKind::Hadamard);
            d.add_edge(b, u, EdgeKind::Hadamard);
            C before = oracle_scalar(d);
            pivot(d, u, v);
            expect_close(oracle_scalar(d), before, 1e-12, "pivot 4-cycle");
        }
}

TEST(Pivot, RejectsNonPauli) {
    ZxDiagram d;
    Vid u = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(0));
    d.add_edge(u, v, EdgeKind::Hadamard);
    try {
        pivot(d, u, v);
        FAIL() << "expected NotPauli";
    } catch (const ZxError& e) {
        EXPECT_EQ(e.code(), Err::NotPauli);
    }
}

TEST(Rewrites, RandomApplicationsPreserveOracle) {
    std::mt19937_64 rng(2024);
    int applied = 0;
    for (int it = 0; it < 200; ++it) {
        auto d = random_closed_diagram(rng, 4 + static_cast<int>(rng() % 8), 0.45);
        C before = oracle_scalar(d, 16);
        // Apply the first applicable rewrite of a randomly chosen kind.
        int kind = static_cast<int>(rng() % 4);
        bool did = false;
        auto sp = d.spiders();
        if (kind == 0) {
            for (Vid v : sp)
                if (detail::lcomp_applicable(d, v)) {
                    local_complement(d, v);
                    did = true;
                    break;
                }
        } else if (kind == 1) {
            for (Vid u : sp) {
                for (Vid v : d.neighbors(u))
                    if (detail::pivot_applicable(d, u, v)) {
                        pivot(d, u, v);
                        did = true;
                        break;
                    }
                if (did) break;
            }
        } else if (kind == 2) {
            for (Vid u : sp) {
                for (Vid v : d.neighbors(u))
                    if (detail::gadget_pivot_applicable(d, u, v)) {
                        gadget_pivot(d, u, v);
                        did = true;
                        break;
                    }
                if (did) break;
            }
        } else {
            for (Vid v : sp)
                if (d.alive(v) && !d.phase(v).is_pauli()) {
                    gadgetize(d, v);
                    did = true;
                    break;
                }
        }
        if (!did) continue;
        ++applied;
        expect_close(oracle_scalar(d, 20), before, 1e-9, "rewrite " + std::to_string(it));
    }
    EXPECT_GT(applied, 100);
}

TEST(FullReduce, CliffordCircuitsCollapseToScalar) {
    std::mt19937_64 rng(555);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);  // up to 8 qubits
        auto c = testsupport::random_circuit(n, 3 * n * n, rng, /*clifford_only=*/true);
        auto d = circuit_to_diagram(c);
        std::vector<uint8_t> zeros(n, 0);
        auto closed = plug_states(d, zeros, zeros);
        full_reduce(closed);
        EXPECT_EQ(closed.n_spiders(), 0u) << "Clifford diagram must fully collapse";
        C got = closed.scalar().to_complex();
        C want = testsupport::amplitude_dense(c, 0, 0);
        EXPECT_LE(std::abs(got - want), 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST(FullReduce, PreservesOracleOnRandomDiagrams) {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        auto d = random_closed_diagram(rng, 4 + static_cast<int>(rng() % 9), 0.4);
        C before = oracle_scalar(d, 16);
        full_reduce(d);
        expect_close(oracle_scalar(d, 20), before, 1e-9, "full_reduce " + std::to_string(it));
    }
}

TEST(FullReduce, PreservesOpenDiagramTensors) {
    std::mt19937_64 rng(888);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto c = testsupport::random_circuit(n, 10, rng);
        auto d = circuit_to_diagram(c);
        auto before = oracle_tensor(d, 40);
        full_reduce(d);
        auto after = oracle_tensor(d, 40);
        ASSERT_EQ(before.entries.size(), after.entries.size());
        for (std::size_t i = 0; i < before.entries.size(); ++i)
            EXPECT_LE(std::abs(before.entries[i] - after.entries[i]),
                      1e-9 * std::max(1.0, std::abs(before.entries[i])))
                << "entry " << i << " iter " << it;
    }
}

TEST(FullReduce, IsIdempotent) {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 20; ++it) {
        auto d = random_closed_diagram(rng, 10, 0.4);
        full_reduce(d);
        auto snapshot = diagram_to_json_string(d);
        auto st = full_reduce(d);
        EXPECT_EQ(st.total(), 0u);
        EXPECT_EQ(diagram_to_json_string(d), snapshot);
    }
}

TEST(FullReduce, ClosedCliffordTLeavesOnlyGadgetsAndNonClifford) {
    std::mt19937_64 rng(1111);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto c = testsupport::random_circuit(n, 25, rng);
        auto d = circuit_to_diagram(c);
        std::vector<uint8_t> zeros(n, 0);
        auto closed = plug_states(d, zeros, zeros);
        full_reduce(closed);
        Vid offender = 0;
        EXPECT_TRUE(check_reduced_closed(closed, &offender))
            << "stray Clifford spider " << offender << " in iter " << it;
        // T-count can only shrink under reduction.
        std::size_t non_clifford = 0;
        for (Vid v : closed.spiders())
            if (!closed.phase(v).is_clifford()) ++non_clifford;
        EXPECT_LE(non_clifford, c.t_count());
    }
}

TEST(BoundaryPivot, RemovesInteriorPauliNextToBoundary) {
    // in -plain- v(0) -H- u(pi) -H- w(pi/4) -plain- out, pivot (u, v).
    ZxDiagram d;
    Vid bi = d.add_vertex(VKind::Boundary);
    Vid v = d.add_vertex(VKind::ZSpider, Phase::pi4(0));
    Vid u = d.add_vertex(VKind::ZSpider, Phase::pi4(4));
    Vid w = d.add_vertex(VKind::ZSpider, Phase::pi4(1));
    Vid bo = d.add_vertex(VKind::Boundary);
    d.inputs().push_back(bi);
    d.outputs().push_back(bo);
    d.add_edge(bi, v, EdgeKind::Plain);
    d.add_edge(v, u, EdgeKind::Hadamard);
    d.add_edge(u, w, EdgeKind::Hadamard);
    d.add_edge(w, bo, EdgeKind::Plain);
    auto before = oracle_tensor(d);
    ASSERT_TRUE(detail::boundary_pivot_applicable(d, u, v));
    boundary_pivot(d, u, v);
    auto after = oracle_tensor(d);
    for (std::size_t i = 0; i < before.entries.size(); ++i)
        EXPECT_LE(std::abs(before.entries[i] - after.entries[i]), 1e-12);
    EXPECT_FALSE(d.alive(u));
    EXPECT_FALSE(d.alive(v));
}

TEST(Gadgetize, ExactlyPreservesValue) {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 20; ++it) {
        auto d = random_closed_diagram(rng, 6, 0.5);
        auto sp = d.spiders();
        Vid v = sp[rng() % sp.size()];
        C before = oracle_scalar(d);
        gadgetize(d, v);
        expect_close(oracle_scalar(d), before, 1e-12, "gadgetize");
    }
}

TEST(Json, DiagramRoundTripIsExact) {
    std::mt19937_64 rng(33);
    auto c = testsupport::random_circuit(3, 15, rng);
    c.gates.push_back(Gate::one(GateKind::Rz, 0, 0.7853981634));
    auto d = circuit_to_diagram(c);
    auto s1 = diagram_to_json_string(d);
    auto d2 = diagram_from_json_string(s1);
    auto s2 = diagram_to_json_string(d2);
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(d2.n_spiders(), d.n_spiders());
    EXPECT_EQ(d2.inputs(), d.inputs());
    EXPECT_EQ(d2.outputs(), d.outputs());
}

TEST(Json, ReducedDiagramRoundTrip) {
    std::mt19937_64 rng(34);
    auto d = random_closed_diagram(rng, 10, 0.5);
    full_reduce(d);
    auto s1 = diagram_to_json_string(d);
    auto d2 = diagram_from_json_string(s1);
    EXPECT_EQ(diagram_to_json_string(d2), s1);
    if (d.n_spiders() <= 20) {
        C a = oracle_scalar(d, 20);
        C b = oracle_scalar(d2, 20);
        EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
    }
}
