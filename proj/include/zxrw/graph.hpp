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

#include <vector>

#include "zxrw/bit_matrix.hpp"
#include "zxrw/diagram.hpp"

namespace zxrw {

/// Simple undirected graph over dense indices 0..n-1, with symmetric
/// adjacency held as a bit matrix. `names` maps indices back to the diagram
/// vertex ids the graph was extracted from (identity when built standalone).
struct UGraph {
    std::size_t n = 0;
    BitMatrix adj;
    std::vector<Vid> names;

    static UGraph empty(std::size_t n) {
        UGraph g;
        g.n = n;
        g.adj = BitMatrix(n, n);
        g.names.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.names[i] = static_cast<Vid>(i);
        return g;
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj.set(u, v, true);
        adj.set(v, u, true);
    }

    [[nodiscard]] bool has_edge(std::size_t u, std::size_t v) const { return adj.get(u, v); }

    [[nodiscard]] Bitset neighbors(std::size_t v) const {
        Bitset s(n);
        for (std::size_t u = 0; u < n; ++u)
            if (adj.get(v, u)) s.set(u);
        return s;
    }

    [[nodiscard]] std::size_t degree(std::size_t v) const {
        std::size_t c = 0;
        for (std::size_t u = 0; u < n; ++u) c += adj.get(v, u);
        return c;
    }

    /// The spider graph of a graph-like diagram: vertices are its spiders in
    /// ascending id order, edges its spider-spider Hadamard edges.
    static UGraph from_diagram(const ZxDiagram& d) {
        auto sp = d.spiders();
        UGraph g;
        g.n = sp.size();
        g.adj = BitMatrix(g.n, g.n);
        g.names = sp;
        std::vector<int> idx(d.capacity(), -1);
        for (std::size_t i = 0; i < sp.size(); ++i) idx[sp[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < sp.size(); ++i) {
            d.hadamard_neighbors(sp[i]).for_each([&](std::size_t u) {
                int j = idx[u];
                if (j >= 0) g.adj.set(i, static_cast<std::size_t>(j), true);
            });
            for (Vid u : d.plain_neighbors(sp[i]))
                if (idx[u] >= 0) throw ZxError(Err::NotGraphLike, "plain spider-spider edge");
        }
        return g;
    }

    /// Biadjacency between X and V \ X, rows in ascending order of X.
    [[nodiscard]] BitMatrix biadjacency(const Bitset& x) const {
        auto rows = x.to_indices();
        std::vector<std::size_t> cols;
        cols.reserve(n - rows.size());
        for (std::size_t v = 0; v < n; ++v)
            if (!x.test(v)) cols.push_back(v);
        BitMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (adj.get(rows[i], cols[j])) m.set(i, j, true);
        return m;
    }
};

/// Cut-rank: rank over the two-element field of the biadjacency between X
/// and its complement. cut_rank(empty) = cut_rank(V) = 0.
inline std::size_t cut_rank(const UGraph& g, const Bitset& x) { return g.biadjacency(x).rank(); }

inline std::size_t cut_rank(const UGraph& g, const std::vector<std::size_t>& xs) {
    Bitset x(g.n);
    for (auto v : xs) x.set(v);
    return cut_rank(g, x);
}

}  // namespace zxrw
