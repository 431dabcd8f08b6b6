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

#include <complex>
#include <vector>

#include "zxrw/diagram.hpp"

namespace zxrw {

inline constexpr std::size_t kDefaultOracleCap = 24;

/// Dense tensor of an open diagram over its boundary assignments. Boundary
/// bit i of x corresponds to inputs[i], with inputs[0] the most significant
/// bit (and likewise for outputs/y).
struct DiagramTensor {
    std::size_t n_in = 0;
    std::size_t n_out = 0;
    std::vector<std::complex<double>> entries;  // index = (x << n_out) | y

    [[nodiscard]] std::complex<double> at(std::size_t x, std::size_t y) const {
        return entries[(x << n_out) | y];
    }
};

namespace detail {

/// Brute-force evaluation of the diagram with every boundary bit fixed:
/// sums over all assignments of {0,1} to the spiders of
///     prod_v e^{i alpha_v x_v} * prod_{Hadamard (u,v)} 2^{-1/2} (-1)^{x_u x_v}
/// with plain edges acting as equality constraints. The per-edge 2^{-1/2}
/// factors are applied once globally.
inline std::complex<double> oracle_sum(const ZxDiagram& d,
                                       const std::vector<Vid>& spiders,
                                       const std::vector<uint8_t>& boundary_bit,
                                       const std::vector<uint8_t>& is_fixed) {
    std::size_t n = spiders.size();
    std::vector<int> index_of(d.capacity(), -1);
    for (std::size_t i = 0; i < n; ++i) index_of[spiders[i]] = static_cast<int>(i);

    // Per spider, in evaluation order: unit phase, Hadamard/plain neighbors
    // that are earlier in the order, and constant contributions from fixed
    // vertices (boundaries).
    struct Node {
        std::complex<double> unit;
        std::vector<int> had_lower;    // earlier spiders joined by a Hadamard edge
        std::vector<int> plain_lower;  // earlier spiders joined by a plain edge
        int fixed_had_ones = 0;        // Hadamard edges to fixed vertices with bit 1
        int fixed_plain = -1;          // forced value from plain edges to fixed vertices
        bool conflict = false;
    };
    std::vector<Node> nodes(n);
    std::size_t n_h_edges = d.n_hadamard_edges();
    double const_sign = 1.0;
    bool zero = false;

    for (std::size_t i = 0; i < n; ++i) {
        Vid v = spiders[i];
        nodes[i].unit = d.phase(v).unit();
        d.hadamard_neighbors(v).for_each([&](std::size_t u) {
            int j = index_of[u];
            if (j >= 0) {
                if (static_cast<std::size_t>(j) < i) nodes[i].had_lower.push_back(j);
            } else {
                if (boundary_bit[u]) nodes[i].fixed_had_ones++;
            }
        });
        for (Vid u : d.plain_neighbors(v)) {
            int j = index_of[u];
            if (j >= 0) {
                if (static_cast<std::size_t>(j) < i) nodes[i].plain_lower.push_back(j);
            } else {
                int b = boundary_bit[u];
                if (nodes[i].fixed_plain >= 0 && nodes[i].fixed_plain != b) nodes[i].conflict = true;
                nodes[i].fixed_plain = b;
            }
        }
    }
    // Fixed-fixed edges (boundary-boundary wires).
    for (auto [u, v, k] : d.edges()) {
        if (index_of[u] >= 0 || index_of[v] >= 0) continue;
        if (!is_fixed[u] || !is_fixed[v]) continue;
        if (k == EdgeKind::Hadamard) {
            if (boundary_bit[u] && boundary_bit[v]) const_sign = -const_sign;
        } else {
            if (boundary_bit[u] != boundary_bit[v]) zero = true;
        }
    }
    if (zero) return {0.0, 0.0};

    std::vector<uint8_t> x(n, 0);
    std::complex<double> total{0.0, 0.0};
    // DFS over assignments with exact per-level partial products.
    auto rec = [&](auto&& self, std::size_t i, std::complex<double> partial) -> void {
        if (i == n) {
            total += partial;
            return;
        }
        const Node& nd = nodes[i];
        if (nd.conflict) return;
        for (uint8_t b = 0; b < 2; ++b) {
            if (nd.fixed_plain >= 0 && nd.fixed_plain != b) continue;
            bool ok = true;
            for (int j : nd.plain_lower)
                if (x[j] != b) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::complex<double> p = partial;
            if (b) {
                int ones = nd.fixed_had_ones;
                for (int j : nd.had_lower) ones += x[j];
                p *= nd.unit;
                if (ones & 1) p = -p;
            }
            x[i] = b;
            self(self, i + 1, p);
        }
    };
    rec(rec, 0, std::complex<double>{const_sign, 0.0});

    // Global 2^{-|E_H|/2}.
    double norm = std::ldexp(1.0, -static_cast<int>(n_h_edges / 2));
    if (n_h_edges % 2) norm *= std::sqrt(0.5);
    return total * norm * d.scalar().to_complex();
}

}  // namespace detail

/// Exact value of a closed diagram by brute-force summation; the ground
/// truth every other evaluation path is tested against.
inline std::complex<double> oracle_scalar(const ZxDiagram& d, std::size_t cap = kDefaultOracleCap) {
    if (!d.is_closed()) throw ZxError(Err::NotClosed, "oracle_scalar");
    auto spiders = d.spiders();
    if (spiders.size() > cap)
        throw ZxError(Err::TooLargeForOracle,
                      std::to_string(spiders.size()) + " spiders > cap " + std::to_string(cap));
    std::vector<uint8_t> bits(d.capacity(), 0);
    std::vector<uint8_t> fixed(d.capacity(), 0);
    return detail::oracle_sum(d, spiders, bits, fixed);
}

/// Dense tensor over boundary assignments of an open diagram, evaluated by
/// brute force with each boundary assignment fixed in turn.
inline DiagramTensor oracle_tensor(const ZxDiagram& d, std::size_t cap = kDefaultOracleCap) {
    auto spiders = d.spiders();
    std::size_t n_b = d.n_boundaries();
    if (spiders.size() + n_b > cap)
        throw ZxError(Err::TooLargeForOracle,
                      std::to_string(spiders.size() + n_b) + " vertices > cap " + std::to_string(cap));
    if (d.inputs().size() + d.outputs().size() != n_b)
        throw ZxError(Err::NotGraphLike, "boundary vertices not all registered as inputs/outputs");
    DiagramTensor t;
    t.n_in = d.inputs().size();
    t.n_out = d.outputs().size();
    t.entries.resize(std::size_t{1} << (t.n_in + t.n_out));
    std::vector<uint8_t> bits(d.capacity(), 0);
    std::vector<uint8_t> fixed(d.capacity(), 0);
    for (Vid b : d.inputs()) fixed[b] = 1;
    for (Vid b : d.outputs()) fixed[b] = 1;
    for (std::size_t x = 0; x < (std::size_t{1} << t.n_in); ++x) {
        for (std::size_t i = 0; i < t.n_in; ++i)
            bits[d.inputs()[i]] = (x >> (t.n_in - 1 - i)) & 1;
        for (std::size_t y = 0; y < (std::size_t{1} << t.n_out); ++y) {
            for (std::size_t i = 0; i < t.n_out; ++i)
                bits[d.outputs()[i]] = (y >> (t.n_out - 1 - i)) & 1;
            t.entries[(x << t.n_out) | y] = detail::oracle_sum(d, spiders, bits, fixed);
        }
    }
    return t;
}

}  // namespace zxrw
