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
#include <functional>
#include <vector>

#include "zxrw/decomposition.hpp"
#include "zxrw/diagram.hpp"
#include "zxrw/graph.hpp"

// Contraction of a closed graph-like diagram along a rank-decomposition.
//
// Numeric conventions, fixed module-wide and arbitrated by the brute-force
// oracle:
//   omega_S(x)   = prod_{v in S} e^{i a_v x_v} * prod_{edges (a,b) in S} (-1)^{x_a x_b}
//                  (each Hadamard edge's 2^{-1/2} is applied once, globally);
//   A_S          = biadjacency between S (rows, leaf order) and the rest
//                  (columns ascending), with rank factorization A = U (M A),
//                  M = left inverse of U;
//   psi_hat_S(c) = sum over x with U^T x = c of omega_S(x)  -- length 2^r;
//   psi_S        = normalized r-fold Hadamard transform of psi_hat_S.
// Node invariant (the checkable contract of every recursion step):
//   sum_x omega_S(x) (-1)^{x . (A_S z)} = 2^{r/2} * psi_S[M_S A_S z]
// for every assignment z of the remaining vertices.

namespace zxrw {

using CVec = std::vector<std::complex<double>>;

enum class ConvolveMethod { Auto, VW, UV, UW };

struct ContractionState {
    CVec amplitudes;                 // psi, length 2^r
    BitMatrix parity;                // M, r x |S|
    std::vector<std::size_t> leaf_set;
};

struct ContractStats {
    uint64_t element_ops = 0;
    std::size_t max_work_exponent = 0;
    std::size_t nodes = 0;
};

struct ContractOptions {
    std::size_t max_work = 30;       // refuse nodes whose dense work exceeds 2^max_work
    ConvolveMethod method = ConvolveMethod::Auto;
    bool validate_nodes = false;     // brute-force node-invariant check (small cases)
    ContractStats* stats = nullptr;
};

namespace detail {

inline std::size_t log2_size(const CVec& v) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < v.size()) ++r;
    if ((std::size_t{1} << r) != v.size())
        throw ZxError(Err::DimensionMismatch, "state length is not a power of two");
    return r;
}

/// Packs each row of E (cols <= 63) into a word mask.
inline std::vector<uint64_t> row_masks(const BitMatrix& e) {
    if (e.cols() > 63) throw ZxError(Err::BudgetExceeded, "rank beyond 63 is unsupported");
    std::vector<uint64_t> rows(e.rows(), 0);
    for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c)
            if (e.get(r, c)) rows[r] |= uint64_t{1} << c;
    return rows;
}

}  // namespace detail

/// In-place normalized Hadamard transform on all r qubits of the state.
inline void hadamard_transform(CVec& v) {
    std::size_t r = detail::log2_size(v);
    const double s = std::sqrt(0.5);
    for (std::size_t bit = 0; bit < r; ++bit) {
        std::size_t mask = std::size_t{1} << bit;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i & mask) continue;
            auto a = v[i], b = v[i | mask];
            v[i] = (a + b) * s;
            v[i | mask] = (a - b) * s;
        }
    }
}

/// Pushforward along x -> xE: out[y] = sum of in[x] over x with xE = y.
inline CVec apply_parity_map(const CVec& in, const BitMatrix& e) {
    std::size_t n = detail::log2_size(in);
    if (e.rows() != n) throw ZxError(Err::DimensionMismatch, "apply_parity_map rows");
    auto rows = detail::row_masks(e);
    CVec out(std::size_t{1} << e.cols(), {0.0, 0.0});
    uint64_t y = 0;
    std::size_t g_prev = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::size_t g = i ^ (i >> 1);  // Gray code; y tracks g's image under E
        if (i > 0) y ^= rows[std::countr_zero(g ^ g_prev)];
        g_prev = g;
        out[y] += in[g];
    }
    return out;
}

/// Multiplies the amplitude at (x, y) by (-1)^{x E y^T}; x is the low `a`
/// bits. Involutive.
inline void cz_phase_layer(CVec& state, const BitMatrix& e) {
    std::size_t n = detail::log2_size(state);
    if (e.rows() + e.cols() != n) throw ZxError(Err::DimensionMismatch, "cz_phase_layer shape");
    auto rows = detail::row_masks(e);  // row i: neighbours of x-bit i among y-bits
    std::size_t a = e.rows();
    for (std::size_t x = 0; x < (std::size_t{1} << a); ++x) {
        uint64_t ex = 0;
        uint64_t xv = x;
        while (xv) {
            ex ^= rows[std::countr_zero(xv)];
            xv &= xv - 1;
        }
        for (std::size_t y = 0; y < (std::size_t{1} << e.cols()); ++y) {
            if (std::popcount(ex & y) & 1) {
                std::size_t idx = x | (y << a);
                state[idx] = -state[idx];
            }
        }
    }
}

/// The tripartite combine step: given the child states (in transformed form)
/// and the parity matrices between the three parts, produces psi_hat of the
/// parent. Three equivalent evaluation orders; Auto picks the cheapest by
/// min(r_v + r_w, r_u + r_v, r_u + r_w).
inline CVec convolve(const CVec& psi_v, const CVec& psi_w, const BitMatrix& e_vu,
                     const BitMatrix& e_wu, const BitMatrix& e_vw,
                     ConvolveMethod method = ConvolveMethod::Auto, ContractStats* stats = nullptr) {
    std::size_t rv = detail::log2_size(psi_v);
    std::size_t rw = detail::log2_size(psi_w);
    std::size_t ru = e_vu.cols();
    if (e_vu.rows() != rv || e_wu.rows() != rw || e_wu.cols() != ru || e_vw.rows() != rv ||
        e_vw.cols() != rw)
        throw ZxError(Err::DimensionMismatch, "convolve parity shapes");
    if (method == ConvolveMethod::Auto) {
        std::size_t cvw = rv + rw, cuv = ru + rv, cuw = ru + rw;
        std::size_t best = std::min({cvw, cuv, cuw});
        method = best == cvw ? ConvolveMethod::VW : best == cuv ? ConvolveMethod::UV : ConvolveMethod::UW;
    }
    auto count = [&](std::size_t exponent, uint64_t times = 1) {
        if (stats) {
            stats->element_ops += times << exponent;
            stats->max_work_exponent = std::max(stats->max_work_exponent, exponent);
        }
    };
    auto half_pow = [](int k) {
        double v = std::ldexp(1.0, k / 2);
        if (k % 2 != 0) v *= (k > 0) ? std::sqrt(2.0) : std::sqrt(0.5);
        return v;
    };
    if (method == ConvolveMethod::VW) {
        // Untransform both children, tensor, CZ layer, push through the
        // stacked parity map.
        CVec phi_v = psi_v, phi_w = psi_w;
        hadamard_transform(phi_v);
        hadamard_transform(phi_w);
        CVec t(std::size_t{1} << (rv + rw));
        for (std::size_t cw = 0; cw < phi_w.size(); ++cw)
            for (std::size_t cv = 0; cv < phi_v.size(); ++cv) t[cv | (cw << rv)] = phi_v[cv] * phi_w[cw];
        cz_phase_layer(t, e_vw);
        count(rv + rw, 3);
        return apply_parity_map(t, BitMatrix::vstack(e_vu, e_wu));
    }
    // Sum over one child's untransformed amplitudes while reading the other
    // child's transformed state; produces psi of the parent up to a power of
    // sqrt 2, then untransforms back to psi_hat.
    bool swap = (method == ConvolveMethod::UV);  // UV sums over c_v, reads psi_w
    const CVec& phi_side = swap ? psi_v : psi_w;
    const CVec& psi_side = swap ? psi_w : psi_v;
    const BitMatrix& e_phi_u = swap ? e_vu : e_wu;          // phase coupling of summed child
    const BitMatrix& e_psi_u = swap ? e_wu : e_vu;          // shift into the read state
    BitMatrix e_cross = swap ? e_vw : e_vw.transpose();     // summed child -> read child
    CVec phi = phi_side;
    hadamard_transform(phi);
    std::size_t r_sum = swap ? rv : rw;
    std::size_t r_read = swap ? rw : rv;
    auto cross_rows = detail::row_masks(e_cross);   // r_sum x r_read
    auto phase_rows = detail::row_masks(e_phi_u);   // r_sum x r_u
    auto shift_cols = detail::row_masks(e_psi_u.transpose());  // r_u rows of r_read masks
    CVec out(std::size_t{1} << ru, {0.0, 0.0});
    for (std::size_t d = 0; d < out.size(); ++d) {
        uint64_t shift = 0;
        uint64_t dv = d;
        while (dv) {
            shift ^= shift_cols[std::countr_zero(dv)];
            dv &= dv - 1;
        }
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t c = 0; c < phi.size(); ++c) {
            uint64_t cross = 0;
            uint64_t cv = c;
            uint64_t phase = 0;
            while (cv) {
                auto b = std::countr_zero(cv);
                cross ^= cross_rows[b];
                phase ^= phase_rows[b];
                cv &= cv - 1;
            }
            std::complex<double> term = phi[c] * psi_side[cross ^ shift];
            acc += (std::popcount(phase & d) & 1) ? -term : term;
        }
        out[d] = acc;
    }
    count(ru + r_sum, 2);
    double scale = half_pow(static_cast<int>(r_read) - static_cast<int>(ru));
    hadamard_transform(out);
    for (auto& z : out) z *= scale;
    return out;
}

namespace detail {

struct RootedNode {
    int left = -1, right = -1;
    int leaf = -1;                    // graph vertex for leaves
    std::vector<std::size_t> leaves;  // leaf set in recursion order
    std::size_t r = 0;                // cut-rank towards the parent
};

struct RootedTree {
    std::vector<RootedNode> nodes;  // node 0 is the dummy root
};

/// Roots a decomposition tree by deleting the edge of maximum stored
/// cut-rank (ties: smallest normalized key) and adding a dummy parent.
inline RootedTree root_tree(const DecompositionTree& t, std::size_t n_graph) {
    if (t.n_nodes() < 2) throw ZxError(Err::TooSmall, "root_tree needs at least one tree edge");
    std::pair<int, int> best{-1, -1};
    std::size_t best_rank = 0;
    for (const auto& [key, r] : t.rank)
        if (best.first < 0 || r > best_rank) {
            best = key;
            best_rank = r;
        }
    RootedTree rt;
    rt.nodes.emplace_back();  // dummy root
    // Orient away from the deleted edge.
    std::function<int(int, int)> build = [&](int cur, int from) -> int {
        int id = static_cast<int>(rt.nodes.size());
        rt.nodes.emplace_back();
        if (t.leaf_vertex[cur] >= 0) {
            rt.nodes[id].leaf = t.leaf_vertex[cur];
            rt.nodes[id].leaves = {static_cast<std::size_t>(t.leaf_vertex[cur])};
        } else {
            std::vector<int> ch;
            for (int nb : t.adj[cur])
                if (nb != from) ch.push_back(nb);
            if (ch.size() != 2) throw ZxError(Err::DecompositionMismatch, "internal degree != 3");
            int l = build(ch[0], cur);
            int r = build(ch[1], cur);
            rt.nodes[id].left = l;
            rt.nodes[id].right = r;
            auto& lv = rt.nodes[id].leaves;
            lv = rt.nodes[l].leaves;
            lv.insert(lv.end(), rt.nodes[r].leaves.begin(), rt.nodes[r].leaves.end());
        }
        rt.nodes[id].r = t.rank_of(cur, from);
        return id;
    };
    int a = build(best.first, best.second);
    int b = build(best.second, best.first);
    rt.nodes[0].left = a;
    rt.nodes[0].right = b;
    auto& lv = rt.nodes[0].leaves;
    lv = rt.nodes[a].leaves;
    lv.insert(lv.end(), rt.nodes[b].leaves.begin(), rt.nodes[b].leaves.end());
    rt.nodes[0].r = 0;
    if (lv.size() != n_graph) throw ZxError(Err::DecompositionMismatch, "leaf set misses vertices");
    return rt;
}

inline BitMatrix submatrix(const UGraph& g, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    BitMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (g.adj.get(rows[i], cols[j])) m.set(i, j, true);
    return m;
}

inline std::vector<std::size_t> complement_of(const std::vector<std::size_t>& set, std::size_t n) {
    std::vector<uint8_t> in(n, 0);
    for (auto v : set) in[v] = 1;
    std::vector<std::size_t> out;
    out.reserve(n - set.size());
    for (std::size_t v = 0; v < n; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

}  // namespace detail

namespace detail {

/// Debug-mode check of the node invariant by brute-force summation over the
/// subdiagram's assignments; exponential, so callers cap the sizes.
inline void check_node_invariant(const ZxDiagram& d, const UGraph& g, const RootedNode& node,
                                 const ContractionState& st) {
    std::size_t k = node.leaves.size();
    auto rest = complement_of(node.leaves, g.n);
    if (k > 12 || rest.size() > 12) return;
    BitMatrix a = submatrix(g, node.leaves, rest);
    std::size_t r = log2_size(st.amplitudes);
    for (std::size_t zbits = 0; zbits < (std::size_t{1} << rest.size()); ++zbits) {
        Bitset z(rest.size());
        for (std::size_t j = 0; j < rest.size(); ++j)
            if ((zbits >> j) & 1) z.set(j);
        Bitset az = a.mul_vec(z);
        std::complex<double> lhs{0.0, 0.0};
        for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) {
            std::complex<double> term{1.0, 0.0};
            for (std::size_t i = 0; i < k; ++i) {
                if (!((x >> i) & 1)) continue;
                term *= d.phase(g.names[node.leaves[i]]).unit();
                if (az.test(i)) term = -term;
                for (std::size_t j = i + 1; j < k; ++j)
                    if (((x >> j) & 1) && g.adj.get(node.leaves[i], node.leaves[j])) term = -term;
            }
            lhs += term;
        }
        // Right-hand side: 2^{r/2} psi[M A z].
        Bitset maz = st.parity.mul_vec(az);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (maz.test(i)) idx |= std::size_t{1} << i;
        std::complex<double> rhs = st.amplitudes[idx] * std::ldexp(1.0, static_cast<int>(r) / 2);
        if (r % 2) rhs *= std::sqrt(2.0);
        if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(lhs)))
            throw ZxError(Err::DecompositionMismatch, "node invariant violated in debug check");
    }
}

}  // namespace detail

/// Contracts a closed graph-like diagram along the decomposition tree;
/// returns its exact value (matches the brute-force oracle).
inline std::complex<double> contract(const ZxDiagram& d, const DecompositionTree& t,
                                     const ContractOptions& opts = {}) {
    if (!d.is_closed()) throw ZxError(Err::NotClosed, "contract");
    d.check_graph_like("contract");
    UGraph g = UGraph::from_diagram(d);
    // Degenerate sizes first.
    if (g.n == 0) {
        if (t.n_nodes() != 0) throw ZxError(Err::DecompositionMismatch, "tree for empty diagram");
        return d.scalar().to_complex();
    }
    if (g.n == 1) {
        if (t.n_nodes() != 1 || t.leaf_vertex[0] != 0)
            throw ZxError(Err::DecompositionMismatch, "tree for single-spider diagram");
        auto val = std::complex<double>{1.0, 0.0} + d.phase(g.names[0]).unit();
        return val * d.scalar().to_complex();
    }
    auto rt = detail::root_tree(t, g.n);
    if (opts.stats) opts.stats->nodes = rt.nodes.size();

    std::function<ContractionState(int)> run = [&](int id) -> ContractionState {
        const auto& node = rt.nodes[id];
        ContractionState st;
        st.leaf_set = node.leaves;
        if (node.leaf >= 0) {
            auto rest = detail::complement_of(node.leaves, g.n);
            BitMatrix a = detail::submatrix(g, node.leaves, rest);
            std::size_t r = a.rank();
            if (r != node.r) throw ZxError(Err::DecompositionMismatch, "leaf rank mismatch");
            auto alpha = d.phase(g.names[node.leaf]).unit();
            if (r == 0) {
                st.amplitudes = {std::complex<double>{1.0, 0.0} + alpha};
                st.parity = BitMatrix(0, 1);
            } else {
                st.amplitudes = {std::complex<double>{1.0, 0.0}, alpha};
                st.parity = BitMatrix::identity(1);
                hadamard_transform(st.amplitudes);
            }
            if (opts.stats) ++opts.stats->element_ops;
            return st;
        }
        ContractionState sv = run(node.left);
        ContractionState sw = run(node.right);
        std::size_t rv = rt.nodes[node.left].r;
        std::size_t rw = rt.nodes[node.right].r;
        std::size_t ru = node.r;
        std::size_t work = std::min({rv + rw, ru + rv, ru + rw});
        if (work > opts.max_work)
            throw ZxError(Err::BudgetExceeded,
                          "node with cut-ranks (" + std::to_string(rv) + "," + std::to_string(rw) +
                              "->" + std::to_string(ru) + ") needs 2^" + std::to_string(work) +
                              " work, over the budget 2^" + std::to_string(opts.max_work));
        // Parity matrices of the tripartite combine.
        BitMatrix b = detail::submatrix(g, sv.leaf_set, sw.leaf_set);
        auto rest = detail::complement_of(node.leaves, g.n);
        BitMatrix a = detail::submatrix(g, node.leaves, rest);
        auto [u, w_unused] = a.rank_factorize();
        if (u.cols() != ru) throw ZxError(Err::DecompositionMismatch, "internal rank mismatch");
        BitMatrix m_u = u.left_inverse();
        std::vector<std::size_t> vrows(sv.leaf_set.size());
        for (std::size_t i = 0; i < vrows.size(); ++i) vrows[i] = i;
        std::vector<std::size_t> wrows(sw.leaf_set.size());
        for (std::size_t i = 0; i < wrows.size(); ++i) wrows[i] = sv.leaf_set.size() + i;
        BitMatrix e_vu = sv.parity * u.select_rows(vrows);
        BitMatrix e_wu = sw.parity * u.select_rows(wrows);
        BitMatrix e_vw = sv.parity * b * sw.parity.transpose();
        CVec phi_u = convolve(sv.amplitudes, sw.amplitudes, e_vu, e_wu, e_vw, opts.method, opts.stats);
        st.amplitudes = std::move(phi_u);
        hadamard_transform(st.amplitudes);
        st.parity = std::move(m_u);
        if (opts.validate_nodes) detail::check_node_invariant(d, g, node, st);
        return st;
    };
    ContractionState root = run(0);
    if (root.amplitudes.size() != 1) throw ZxError(Err::DecompositionMismatch, "root state not scalar");
    std::complex<double> value = root.amplitudes[0];
    // Global per-edge normalisation.
    std::size_t n_edges = d.n_hadamard_edges();
    double norm = std::ldexp(1.0, -static_cast<int>(n_edges / 2));
    if (n_edges % 2) norm *= std::sqrt(0.5);
    return value * norm * d.scalar().to_complex();
}

}  // namespace zxrw
