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

#include <map>
#include <string>
#include <vector>

#include "zxrw/big_uint.hpp"
#include "zxrw/graph.hpp"

namespace zxrw {

/// Branch-decomposition with per-edge cut-ranks: a tree whose non-leaf nodes
/// have degree 3, leaves in bijection with the graph vertices. Graphs with
/// one vertex use a degenerate single-node tree; the empty graph an empty
/// tree.
struct DecompositionTree {
    std::vector<std::vector<int>> adj;               // tree adjacency
    std::vector<int> leaf_vertex;                    // node -> graph vertex index, -1 internal
    std::map<std::pair<int, int>, std::size_t> rank; // normalized edge -> cut-rank

    [[nodiscard]] std::size_t n_nodes() const { return adj.size(); }

    int add_node(int leaf_of = -1) {
        adj.emplace_back();
        leaf_vertex.push_back(leaf_of);
        return static_cast<int>(adj.size()) - 1;
    }

    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    void set_rank(int a, int b, std::size_t r) { rank[key(a, b)] = r; }
    [[nodiscard]] std::size_t rank_of(int a, int b) const { return rank.at(key(a, b)); }

    [[nodiscard]] std::size_t width() const {
        std::size_t w = 0;
        for (const auto& [k, r] : rank) w = std::max(w, r);
        return w;
    }

    /// Graph vertices on the `a` side of edge (a, b).
    [[nodiscard]] Bitset side(int a, int b, std::size_t n_graph) const {
        Bitset s(n_graph);
        std::vector<int> stack{a};
        std::vector<uint8_t> seen(adj.size(), 0);
        seen[a] = 1;
        seen[b] = 1;  // blocked
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (leaf_vertex[x] >= 0) s.set(static_cast<std::size_t>(leaf_vertex[x]));
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        return s;
    }

    /// Recomputes and stores every edge's cut-rank from scratch.
    void populate_ranks(const UGraph& g) {
        for (std::size_t a = 0; a < adj.size(); ++a)
            for (int b : adj[a])
                if (static_cast<int>(a) < b)
                    set_rank(static_cast<int>(a), b, cut_rank(g, side(static_cast<int>(a), b, g.n)));
    }
};

/// Cost model: flops(T) = sum over tree nodes of 2^{w_v}, where w_v is the
/// cheapest pair-sum of incident cut-ranks at degree-3 nodes and 0 at
/// leaves.
inline BigUint flops(const DecompositionTree& t) {
    BigUint total;
    for (std::size_t v = 0; v < t.n_nodes(); ++v) {
        const auto& nb = t.adj[v];
        if (nb.size() <= 1) {
            total.add_pow2(0);
        } else if (nb.size() == 3) {
            std::size_t r0 = t.rank_of(static_cast<int>(v), nb[0]);
            std::size_t r1 = t.rank_of(static_cast<int>(v), nb[1]);
            std::size_t r2 = t.rank_of(static_cast<int>(v), nb[2]);
            std::size_t w = std::min({r0 + r1, r0 + r2, r1 + r2});
            total.add_pow2(w);
        } else {
            throw ZxError(Err::DecompositionMismatch,
                          "node degree " + std::to_string(nb.size()) + " in decomposition tree");
        }
    }
    return total;
}

/// Linear rank-decomposition: a permutation of the graph vertices with the
/// prefix cut-ranks r_i between {p_1..p_i} and the rest.
struct LinearOrder {
    std::vector<std::size_t> order;  // graph vertex indices
    std::vector<std::size_t> ranks;  // ranks[i] = cut rank of prefix of size i+1, i < n-1

    [[nodiscard]] std::size_t width() const {
        std::size_t w = 0;
        for (auto r : ranks) w = std::max(w, r);
        return w;
    }
};

inline LinearOrder make_linear_order(const UGraph& g, std::vector<std::size_t> order) {
    LinearOrder p;
    p.order = std::move(order);
    if (p.order.size() != g.n) throw ZxError(Err::DimensionMismatch, "order size != n");
    Bitset prefix(g.n);
    for (std::size_t i = 0; i + 1 < p.order.size(); ++i) {
        prefix.set(p.order[i]);
        p.ranks.push_back(cut_rank(g, prefix));
    }
    return p;
}

/// Caterpillar tree of a linear order: leaves hang off a spine in order, and
/// the spine edge after position i carries the prefix cut-rank r_i.
inline DecompositionTree linear_to_tree(const UGraph& g, const LinearOrder& p) {
    std::size_t n = p.order.size();
    if (n < 2) throw ZxError(Err::TooSmall, "linear_to_tree needs at least 2 vertices");
    DecompositionTree t;
    std::vector<int> leaves(n);
    for (std::size_t i = 0; i < n; ++i)
        leaves[i] = t.add_node(static_cast<int>(p.order[i]));
    if (n == 2) {
        t.add_edge(leaves[0], leaves[1]);
    } else {
        std::vector<int> spine(n - 2);
        for (std::size_t i = 0; i < n - 2; ++i) spine[i] = t.add_node();
        t.add_edge(leaves[0], spine[0]);
        t.add_edge(leaves[1], spine[0]);
        for (std::size_t i = 1; i < n - 2; ++i) {
            t.add_edge(spine[i - 1], spine[i]);
            t.add_edge(leaves[i + 1], spine[i]);
        }
        t.add_edge(leaves[n - 1], spine[n - 3]);
    }
    t.populate_ranks(g);
    return t;
}

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/// Checks the leaf bijection, internal degrees, connectivity, and every
/// stored cut-rank against a fresh computation.
inline VerifyReport verify_decomposition(const UGraph& g, const DecompositionTree& t) {
    VerifyReport rep;
    std::size_t m = t.n_nodes();
    if (g.n == 0) {
        if (m != 0) rep.fail("empty graph requires empty tree");
        return rep;
    }
    if (g.n == 1) {
        if (m != 1 || t.leaf_vertex[0] != 0) rep.fail("single-vertex graph requires one leaf node");
        return rep;
    }
    std::vector<int> seen_vertex(g.n, 0);
    std::size_t edge_count = 0;
    for (std::size_t v = 0; v < m; ++v) {
        edge_count += t.adj[v].size();
        std::size_t deg = t.adj[v].size();
        if (t.leaf_vertex[v] >= 0) {
            if (deg != 1) rep.fail("leaf node " + std::to_string(v) + " has degree " + std::to_string(deg));
            if (t.leaf_vertex[v] >= static_cast<int>(g.n))
                rep.fail("leaf maps outside the graph");
            else
                seen_vertex[t.leaf_vertex[v]]++;
        } else {
            if (deg != 3)
                rep.fail("internal node " + std::to_string(v) + " has degree " + std::to_string(deg));
        }
    }
    edge_count /= 2;
    if (edge_count != m - 1) rep.fail("tree edge count mismatch");
    for (std::size_t x = 0; x < g.n; ++x)
        if (seen_vertex[x] != 1)
            rep.fail("graph vertex " + std::to_string(x) + " mapped by " +
                     std::to_string(seen_vertex[x]) + " leaves");
    // Connectivity.
    if (m > 0) {
        std::vector<uint8_t> vis(m, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        std::size_t cnt = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++cnt;
            for (int y : t.adj[x])
                if (!vis[y]) {
                    vis[y] = 1;
                    stack.push_back(y);
                }
        }
        if (cnt != m) rep.fail("tree not connected");
    }
    if (!rep.ok) return rep;
    for (std::size_t a = 0; a < m; ++a)
        for (int b : t.adj[a])
            if (static_cast<int>(a) < b) {
                auto it = t.rank.find(DecompositionTree::key(static_cast<int>(a), b));
                if (it == t.rank.end()) {
                    rep.fail("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has no rank");
                    continue;
                }
                std::size_t fresh = cut_rank(g, t.side(static_cast<int>(a), b, g.n));
                if (fresh != it->second)
                    rep.fail("edge (" + std::to_string(a) + "," + std::to_string(b) + ") stores rank " +
                             std::to_string(it->second) + " but cut-rank is " + std::to_string(fresh));
            }
    return rep;
}

}  // namespace zxrw
