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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zxrw/circuit.hpp"
#include "zxrw/diagram.hpp"

namespace zxrw {

struct RewriteStats {
    std::size_t fusions = 0;
    std::size_t scalar_spiders = 0;
    std::size_t identities = 0;
    std::size_t local_complements = 0;
    std::size_t pivots = 0;
    std::size_t boundary_pivots = 0;
    std::size_t gadget_pivots = 0;

    [[nodiscard]] std::size_t total() const {
        return fusions + scalar_spiders + identities + local_complements + pivots +
               boundary_pivots + gadget_pivots;
    }
};

namespace detail {

/// True if v is a spider whose neighbourhood consists of spiders only (so
/// phase updates can land on every neighbour).
inline bool spider_with_spider_neighborhood(const ZxDiagram& d, Vid v) {
    if (!d.is_spider(v)) return false;
    if (!d.plain_neighbors(v).empty()) return false;
    bool ok = true;
    d.hadamard_neighbors(v).for_each([&](std::size_t u) {
        if (!d.is_spider(static_cast<Vid>(u))) ok = false;
    });
    return ok;
}

inline bool has_degree_one_spider_neighbor(const ZxDiagram& d, Vid v) {
    bool found = false;
    d.hadamard_neighbors(v).for_each([&](std::size_t u) {
        if (d.is_spider(static_cast<Vid>(u)) && d.degree(static_cast<Vid>(u)) == 1) found = true;
    });
    return found;
}

}  // namespace detail

/// Local complementation at an internal proper-Clifford spider v: v is
/// removed, its neighbourhood is edge-complemented, each neighbour loses v's
/// phase, and the scalar picks up the exact factor
/// sqrt2^(1 - d + #pairs - 2*#edges) * e^{+-i pi/4}.
inline void local_complement(ZxDiagram& d, Vid v) {
    if (!d.is_spider(v)) throw ZxError(Err::NotGraphLike, "local_complement: not a spider");
    if (!d.phase(v).is_proper_clifford())
        throw ZxError(Err::NotProperClifford, "local_complement needs phase +-pi/2");
    if (!detail::spider_with_spider_neighborhood(d, v))
        throw ZxError(Err::NotGraphLike, "local_complement: neighbourhood must be spiders");
    Bitset nv = d.hadamard_neighbors(v);
    auto neighbors = nv.to_indices();
    std::size_t deg = neighbors.size();
    std::size_t present = 0;
    for (std::size_t u : neighbors) present += d.hadamard_neighbors(static_cast<Vid>(u)).count_and(nv);
    present /= 2;
    int beta = d.phase(v).pi4_numerator();  // 2 or 6
    for (std::size_t u : neighbors) {
        d.xor_hadamard_row(static_cast<Vid>(u), nv);
        d.add_phase_pi4(static_cast<Vid>(u), 8 - beta);
    }
    std::size_t pairs = deg * (deg - 1) / 2;
    d.scalar().mul_sqrt2_power(1 - static_cast<int>(deg) + static_cast<int>(pairs) -
                               2 * static_cast<int>(present));
    d.scalar().mul_phase_pi4(beta == 2 ? 1 : 7);
    d.remove_vertex(v);
}

/// Pivot at an adjacent internal Pauli pair (u, v): both are removed and the
/// three neighbourhood classes A = N(u)\N(v), B = N(v)\N(u), C = N(u)&N(v)
/// are pairwise biclique-complemented; A gains v's phase, B gains u's phase,
/// C gains pi plus both.
inline void pivot(ZxDiagram& d, Vid u, Vid v) {
    if (!d.is_spider(u) || !d.is_spider(v)) throw ZxError(Err::NotGraphLike, "pivot: not spiders");
    if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli())
        throw ZxError(Err::NotPauli, "pivot needs Pauli phases on both spiders");
    if (!d.has_hadamard_edge(u, v)) throw ZxError(Err::NotGraphLike, "pivot: not adjacent");
    if (!detail::spider_with_spider_neighborhood(d, u) ||
        !detail::spider_with_spider_neighborhood(d, v))
        throw ZxError(Err::NotGraphLike, "pivot: neighbourhoods must be spiders");

    Bitset nu = d.hadamard_neighbors(u);
    Bitset nvv = d.hadamard_neighbors(v);
    std::size_t du = nu.count();
    std::size_t dv = nvv.count();
    Bitset a = nu.minus(nvv);
    a.reset(v);
    Bitset b = nvv.minus(nu);
    b.reset(u);
    Bitset c = nu & nvv;

    auto cross_edges = [&](const Bitset& x, const Bitset& y) {
        std::size_t n = 0;
        x.for_each([&](std::size_t w) { n += d.hadamard_neighbors(static_cast<Vid>(w)).count_and(y); });
        return n;
    };
    std::size_t removed = cross_edges(a, b) + cross_edges(a, c) + cross_edges(b, c);
    std::size_t total = a.count() * b.count() + a.count() * c.count() + b.count() * c.count();
    std::size_t added = total - removed;

    Bitset bc = b | c;
    Bitset ac = a | c;
    Bitset ab = a | b;
    a.for_each([&](std::size_t w) { d.xor_hadamard_row(static_cast<Vid>(w), bc); });
    b.for_each([&](std::size_t w) { d.xor_hadamard_row(static_cast<Vid>(w), ac); });
    c.for_each([&](std::size_t w) { d.xor_hadamard_row(static_cast<Vid>(w), ab); });

    bool upi = d.phase(u).is_pi();
    bool vpi = d.phase(v).is_pi();
    if (vpi) a.for_each([&](std::size_t w) { d.add_phase_pi4(static_cast<Vid>(w), 4); });
    if (upi) b.for_each([&](std::size_t w) { d.add_phase_pi4(static_cast<Vid>(w), 4); });
    int cpi = 1 + (upi ? 1 : 0) + (vpi ? 1 : 0);
    if (cpi % 2 == 1) c.for_each([&](std::size_t w) { d.add_phase_pi4(static_cast<Vid>(w), 4); });

    d.scalar().mul_sqrt2_power(2 - static_cast<int>(du + dv - 1) + static_cast<int>(added) -
                               static_cast<int>(removed));
    if (upi && vpi) d.scalar().mul_complex({-1.0, 0.0});
    d.remove_vertex(u);
    d.remove_vertex(v);
}

/// Moves a non-Pauli phase off a spider into a fresh two-spider gadget
/// hanging off it; exactly value-preserving. Returns (body, leaf).
inline std::pair<Vid, Vid> gadgetize(ZxDiagram& d, Vid v) {
    Phase alpha = d.phase(v);
    d.set_phase(v, Phase{});
    Vid body = d.add_vertex(VKind::ZSpider, Phase{});
    Vid leaf = d.add_vertex(VKind::ZSpider, alpha);
    d.add_edge(v, body, EdgeKind::Hadamard);
    d.add_edge(body, leaf, EdgeKind::Hadamard);
    return {body, leaf};
}

/// Detaches the single boundary edge of v by inserting a fresh phase-0
/// spider z: b -k- v becomes b -toggle(k)- z -H- v. Exactly value-preserving.
inline Vid detach_boundary(ZxDiagram& d, Vid v, Vid b) {
    EdgeKind k = d.has_hadamard_edge(v, b) ? EdgeKind::Hadamard : EdgeKind::Plain;
    d.remove_edge(v, b);
    Vid z = d.add_vertex(VKind::ZSpider, Phase{});
    d.add_edge(b, z, k == EdgeKind::Hadamard ? EdgeKind::Plain : EdgeKind::Hadamard);
    d.add_edge(z, v, EdgeKind::Hadamard);
    return z;
}

namespace detail {

inline bool lcomp_applicable(const ZxDiagram& d, Vid v) {
    return d.is_spider(v) && d.phase(v).is_proper_clifford() &&
           spider_with_spider_neighborhood(d, v);
}

inline bool pivot_applicable(const ZxDiagram& d, Vid u, Vid v) {
    return d.is_spider(u) && d.is_spider(v) && d.has_hadamard_edge(u, v) &&
           d.phase(u).is_pauli() && d.phase(v).is_pauli() &&
           spider_with_spider_neighborhood(d, u) && spider_with_spider_neighborhood(d, v);
}

// v is Pauli with exactly one boundary neighbour, everything else spiders;
// u is an interior Pauli spider adjacent to v.
inline bool boundary_pivot_applicable(const ZxDiagram& d, Vid u, Vid v) {
    if (!d.is_spider(u) || !d.is_spider(v) || !d.has_hadamard_edge(u, v)) return false;
    if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli()) return false;
    if (!spider_with_spider_neighborhood(d, u)) return false;
    std::size_t boundaries = 0;
    bool bad = false;
    d.hadamard_neighbors(v).for_each([&](std::size_t w) {
        if (d.is_boundary(static_cast<Vid>(w))) ++boundaries;
    });
    for (Vid w : d.plain_neighbors(v)) {
        if (d.is_boundary(w))
            ++boundaries;
        else
            bad = true;
    }
    return !bad && boundaries == 1;
}

inline bool gadget_pivot_applicable(const ZxDiagram& d, Vid u, Vid v) {
    return d.is_spider(u) && d.is_spider(v) && d.has_hadamard_edge(u, v) &&
           d.phase(u).is_pauli() && !d.phase(v).is_pauli() &&
           spider_with_spider_neighborhood(d, u) && spider_with_spider_neighborhood(d, v) &&
           !has_degree_one_spider_neighbor(d, u);
}

inline Vid single_boundary_neighbor(const ZxDiagram& d, Vid v) {
    Vid b = static_cast<Vid>(-1);
    d.hadamard_neighbors(v).for_each([&](std::size_t w) {
        if (d.is_boundary(static_cast<Vid>(w))) b = static_cast<Vid>(w);
    });
    for (Vid w : d.plain_neighbors(v))
        if (d.is_boundary(w)) b = w;
    return b;
}

}  // namespace detail

/// Pivot variant for a Pauli spider v carrying exactly one boundary wire:
/// the boundary is first detached through a fresh spider, then (u, v) is
/// pivoted away. Net vertex count strictly decreases.
inline void boundary_pivot(ZxDiagram& d, Vid u, Vid v) {
    if (!detail::boundary_pivot_applicable(d, u, v))
        throw ZxError(Err::NotPauli, "boundary_pivot preconditions");
    Vid b = detail::single_boundary_neighbor(d, v);
    detach_boundary(d, v, b);
    pivot(d, u, v);
}

/// Pivot variant removing an interior Pauli spider u along a non-Pauli
/// neighbour v: v's phase is gadgetized out, then (u, v) is pivoted.
inline void gadget_pivot(ZxDiagram& d, Vid u, Vid v) {
    if (!detail::gadget_pivot_applicable(d, u, v))
        throw ZxError(Err::NotPauli, "gadget_pivot preconditions");
    gadgetize(d, v);
    pivot(d, u, v);
}

/// Simplifies to the reduced form: repeatedly fuse, drop scalar and identity
/// spiders, then run local complementations (lowest id first) and pivots
/// (lexicographic), including the boundary and gadget variants, to fixpoint.
/// Closed diagrams end up with only non-Clifford spiders and phase gadgets.
inline RewriteStats full_reduce(ZxDiagram& d) {
    RewriteStats st;
    to_graph_like(d);
    bool progress = true;
    while (progress) {
        progress = false;
        // Scalar spiders: degree-0 spiders fold into the tracked scalar.
        for (Vid v : d.spiders()) {
            if (d.degree(v) == 0) {
                d.scalar().mul_complex(std::complex<double>{1.0, 0.0} + d.phase(v).unit());
                d.remove_vertex(v);
                ++st.scalar_spiders;
                progress = true;
            }
        }
        // Identity spiders: phase-0 degree-2 spiders drop out, composing
        // their two edges.
        for (Vid v : d.spiders()) {
            if (!d.alive(v) || !d.phase(v).is_zero() || d.degree(v) != 2) continue;
            auto ns = d.neighbors(v);
            if (ns.size() != 2 || ns[0] == ns[1]) continue;
            bool h1 = d.has_hadamard_edge(v, ns[0]);
            bool h2 = d.has_hadamard_edge(v, ns[1]);
            EdgeKind k = (h1 != h2) ? EdgeKind::Hadamard : EdgeKind::Plain;
            d.remove_vertex(v);
            d.add_edge(ns[0], ns[1], k);
            if (d.is_spider(ns[0]) && d.is_spider(ns[1]) && d.has_plain_edge(ns[0], ns[1])) {
                d.fuse(std::min(ns[0], ns[1]), std::max(ns[0], ns[1]));
                ++st.fusions;
            }
            ++st.identities;
            progress = true;
        }
        if (progress) continue;  // re-normalise before the heavier rules
        for (Vid v : d.spiders()) {
            if (detail::lcomp_applicable(d, v)) {
                local_complement(d, v);
                ++st.local_complements;
                progress = true;
            }
        }
        if (progress) continue;
        auto try_pairs = [&](auto&& applicable, auto&& apply, std::size_t& counter) {
            for (Vid u : d.spiders()) {
                if (!d.alive(u)) continue;
                for (Vid v : d.neighbors(u)) {
                    if (applicable(d, u, v)) {
                        apply(d, u, v);
                        ++counter;
                        progress = true;
                        break;  // u is gone; move on
                    }
                }
            }
        };
        try_pairs([](auto& g, Vid a, Vid b) { return detail::pivot_applicable(g, a, b); },
                  [](auto& g, Vid a, Vid b) { pivot(g, a, b); }, st.pivots);
        if (progress) continue;
        try_pairs([](auto& g, Vid a, Vid b) { return detail::boundary_pivot_applicable(g, a, b); },
                  [](auto& g, Vid a, Vid b) { boundary_pivot(g, a, b); }, st.boundary_pivots);
        if (progress) continue;
        // Gadget pivots run on closed diagrams only: the gadget normal form
        // is needed there, while on open diagrams this rule can destroy the
        // existence of an extended gflow (the other rules preserve it).
        if (d.is_closed())
            try_pairs([](auto& g, Vid a, Vid b) { return detail::gadget_pivot_applicable(g, a, b); },
                      [](auto& g, Vid a, Vid b) { gadget_pivot(g, a, b); }, st.gadget_pivots);
    }
    return st;
}

/// A phase gadget in a reduced diagram: a body spider together with its
/// degree-1 leaves. Bodies with a non-Clifford phase are not gadgets (the
/// body then counts as an ordinary non-Clifford spider).
inline bool is_gadget_leaf(const ZxDiagram& d, Vid v) {
    if (!d.is_spider(v) || d.degree(v) != 1) return false;
    auto ns = d.neighbors(v);
    return d.is_spider(ns[0]);
}

/// In a closed reduced diagram, every internal Clifford spider must be the
/// Pauli body of a phase gadget; returns false (with the offending vertex)
/// otherwise.
inline bool check_reduced_closed(const ZxDiagram& d, Vid* offender = nullptr) {
    for (Vid v : d.spiders()) {
        if (!d.phase(v).is_clifford()) continue;
        // Clifford spider: must be a Pauli gadget body.
        bool body = d.phase(v).is_pauli() && detail::has_degree_one_spider_neighbor(d, v);
        if (!body) {
            if (offender) *offender = v;
            return false;
        }
    }
    return true;
}

}  // namespace zxrw
