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

#include <algorithm>
#include <map>
#include <vector>

#include "zxrw/decomposition.hpp"
#include "zxrw/gflow.hpp"
#include "zxrw/simplify.hpp"

namespace zxrw {

/// Linear rank-decomposition from an extended gflow: any linear extension of
/// the measurement order (here: layer, then index). Its width never exceeds
/// the number of output vertices.
inline LinearOrder rw_flow(const OpenGraph& og, const ExtendedGFlow& f) {
    GFlowViolation v;
    if (!verify_gflow(og, f, &v))
        throw ZxError(Err::InvalidGFlow, "vertex " + std::to_string(v.vertex) + " condition " +
                                             std::to_string(v.condition) + ": " + v.message);
    std::vector<std::size_t> order(og.g.n);
    for (std::size_t i = 0; i < og.g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f.layer[a] < f.layer[b]; });
    return make_linear_order(og.g, order);
}

/// Greedy linear decomposition: append, at each step, the candidate with the
/// smallest resulting prefix cut-rank. Candidates are the pivot columns of
/// the current prefix biadjacency (the whole remainder when it is zero, or
/// when the restriction is disabled for ablation runs). Ties break to the
/// lowest vertex index.
inline LinearOrder rw_greedy_linear(const UGraph& g, bool restrict_to_pivot_cols = true) {
    std::size_t n = g.n;
    Bitset prefix(n);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<uint8_t> used(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) rest.push_back(v);
        BitMatrix m(order.size(), rest.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = 0; j < rest.size(); ++j)
                if (g.adj.get(order[i], rest[j])) m.set(i, j, true);
        std::size_t chosen;
        if (m.is_zero()) {
            chosen = rest.front();
        } else {
            std::vector<std::size_t> candidates;
            if (restrict_to_pivot_cols) {
                for (std::size_t col : m.pivot_cols()) candidates.push_back(rest[col]);
            } else {
                candidates = rest;
            }
            std::size_t best_rank = SIZE_MAX;
            chosen = candidates.front();
            for (std::size_t u : candidates) {
                prefix.set(u);
                std::size_t r = cut_rank(g, prefix);
                prefix.reset(u);
                if (r < best_rank || (r == best_rank && u < chosen)) {
                    best_rank = r;
                    chosen = u;
                }
            }
        }
        used[chosen] = 1;
        prefix.set(chosen);
        order.push_back(chosen);
    }
    return make_linear_order(g, order);
}

/// Greedy bottom-to-top decomposition: maintain a forest of partial
/// decompositions; a root pair (i, j) is valid when S_i meets the pivot
/// columns of S_j's biadjacency; merge the valid pair of smallest merged
/// cut-rank (the lexicographically first pair when none is valid), |V|-1
/// times. Cut-ranks of candidate merges are cached while both roots live.
inline DecompositionTree rw_greedy_b2t(const UGraph& g) {
    std::size_t n = g.n;
    if (n < 2) throw ZxError(Err::TooSmall, "rw_greedy_b2t needs at least 2 vertices");
    DecompositionTree t;
    struct Root {
        int node;
        Bitset leaves;
        Bitset pivot_verts;
    };
    auto pivot_verts_of = [&](const Bitset& leaves) {
        Bitset pv(n);
        std::vector<std::size_t> cols;
        for (std::size_t v = 0; v < n; ++v)
            if (!leaves.test(v)) cols.push_back(v);
        auto rows = leaves.to_indices();
        BitMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (g.adj.get(rows[i], cols[j])) m.set(i, j, true);
        for (std::size_t col : m.pivot_cols()) pv.set(cols[col]);
        return pv;
    };
    std::vector<Root> roots;
    for (std::size_t v = 0; v < n; ++v) {
        Bitset s(n);
        s.set(v);
        roots.push_back({t.add_node(static_cast<int>(v)), s, pivot_verts_of(s)});
    }
    std::map<std::pair<int, int>, std::size_t> rank_cache;
    auto merged_rank = [&](const Root& a, const Root& b) {
        auto k = DecompositionTree::key(a.node, b.node);
        auto it = rank_cache.find(k);
        if (it != rank_cache.end()) return it->second;
        std::size_t r = cut_rank(g, a.leaves | b.leaves);
        rank_cache.emplace(k, r);
        return r;
    };
    for (std::size_t step = 0; step + 1 < n; ++step) {
        int best_i = -1, best_j = -1;
        std::size_t best_rank = SIZE_MAX;
        for (std::size_t a = 0; a < roots.size(); ++a)
            for (std::size_t b = a + 1; b < roots.size(); ++b) {
                bool valid = roots[a].leaves.intersects(roots[b].pivot_verts) ||
                             roots[b].leaves.intersects(roots[a].pivot_verts);
                if (!valid) continue;
                std::size_t r = merged_rank(roots[a], roots[b]);
                if (r < best_rank) {
                    best_rank = r;
                    best_i = static_cast<int>(a);
                    best_j = static_cast<int>(b);
                }
            }
        if (best_i < 0) {  // no valid pair: lexicographically first
            best_i = 0;
            best_j = 1;
        }
        Root merged;
        bool last = (step + 2 == n);
        if (last) {
            // Final merge: connect the two remaining roots directly so every
            // internal node keeps degree 3.
            t.add_edge(roots[best_i].node, roots[best_j].node);
            roots.clear();
            break;
        }
        merged.node = t.add_node();
        t.add_edge(merged.node, roots[best_i].node);
        t.add_edge(merged.node, roots[best_j].node);
        merged.leaves = roots[best_i].leaves | roots[best_j].leaves;
        merged.pivot_verts = pivot_verts_of(merged.leaves);
        if (best_j > best_i) std::swap(best_i, best_j);
        roots.erase(roots.begin() + best_i);
        roots.erase(roots.begin() + best_j);
        roots.push_back(merged);
    }
    t.populate_ranks(g);
    return t;
}

/// Units of the t-count construction on a closed reduced diagram: every
/// non-Clifford spider alone, every phase gadget (Pauli body plus its
/// degree-1 leaves) as one unit with the body last. A Clifford spider
/// outside any gadget means the diagram is not reduced.
inline std::vector<std::vector<Vid>> tcount_units(const ZxDiagram& d) {
    if (!d.is_closed()) throw ZxError(Err::NotClosed, "tcount_units");
    std::map<Vid, std::vector<Vid>> body_leaves;
    std::map<Vid, Vid> assigned_to;  // spider -> body
    auto sp = d.spiders();
    for (Vid v : sp) {
        if (d.degree(v) != 1) continue;
        if (assigned_to.count(v)) continue;
        auto ns = d.neighbors(v);
        Vid b = ns[0];
        if (!d.is_spider(b)) continue;
        if (assigned_to.count(b) && assigned_to[b] != b) continue;  // body already used as a leaf
        if (d.phase(b).is_pauli()) {
            body_leaves[b].push_back(v);
            assigned_to[v] = b;
            assigned_to[b] = b;
        }
    }
    std::vector<std::vector<Vid>> units;
    for (Vid v : sp) {
        if (assigned_to.count(v)) {
            if (assigned_to[v] == v) {  // body: emit leaves then body
                auto unit = body_leaves[v];
                unit.push_back(v);
                units.push_back(std::move(unit));
            }
            continue;
        }
        if (d.phase(v).is_clifford())
            throw ZxError(Err::NotReduced,
                          "Clifford spider " + std::to_string(v) + " outside any phase gadget");
        units.push_back({v});
    }
    std::sort(units.begin(), units.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return units;
}

/// The t-count decomposition: a linear order over units (ascending vertex
/// id) whose gadget nodes expand into their leaf children. Width is at most
/// ceil(units / 2).
inline DecompositionTree rw_tcount(const ZxDiagram& d, const UGraph& g) {
    auto units_ids = tcount_units(d);
    std::vector<int> idx(d.capacity(), -1);
    for (std::size_t i = 0; i < g.n; ++i) idx[g.names[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> units;
    for (const auto& u : units_ids) {
        std::vector<int> m;
        for (Vid v : u) {
            if (idx[v] < 0) throw ZxError(Err::DecompositionMismatch, "graph misses a spider");
            m.push_back(idx[v]);
        }
        units.push_back(std::move(m));
    }
    DecompositionTree t;
    if (units.empty()) {
        if (g.n != 0) throw ZxError(Err::NotReduced, "spiders remain but no units found");
        return t;
    }
    // Comb a unit's spiders together; with `open` the top node expects a
    // parent edge, otherwise the comb is finished as a complete tree.
    auto build_unit = [&](const std::vector<int>& spiders, bool open) {
        int att = t.add_node(spiders[0]);
        std::size_t k = spiders.size();
        std::size_t combined = open ? k : (k >= 2 ? k - 1 : k);
        for (std::size_t i = 1; i < combined; ++i) {
            int leaf = t.add_node(spiders[i]);
            int m = t.add_node();
            t.add_edge(m, att);
            t.add_edge(m, leaf);
            att = m;
        }
        if (!open && k >= 2) {
            int leaf = t.add_node(spiders[k - 1]);
            t.add_edge(att, leaf);
        }
        return att;
    };
    if (units.size() == 1) {
        build_unit(units[0], false);
    } else {
        int att = build_unit(units[0], true);
        for (std::size_t i = 1; i + 1 < units.size(); ++i) {
            int ua = build_unit(units[i], true);
            int m = t.add_node();
            t.add_edge(m, att);
            t.add_edge(m, ua);
            att = m;
        }
        int last = build_unit(units.back(), true);
        t.add_edge(att, last);
    }
    t.populate_ranks(g);
    return t;
}

inline DecompositionTree rw_tcount(const ZxDiagram& d) { return rw_tcount(d, UGraph::from_diagram(d)); }

}  // namespace zxrw
