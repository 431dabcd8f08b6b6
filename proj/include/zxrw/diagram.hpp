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
#include <cstdint>
#include <utility>
#include <vector>

#include "zxrw/bit_matrix.hpp"
#include "zxrw/errors.hpp"
#include "zxrw/phase.hpp"
#include "zxrw/scalar.hpp"

namespace zxrw {

using Vid = uint32_t;

enum class VKind : uint8_t { ZSpider, Boundary };
enum class EdgeKind : uint8_t { Plain, Hadamard };

/// ZX-diagram with phased Z-spiders, boundary vertices, plain/Hadamard edges
/// and a tracked global scalar. Vertex ids are stable and never reused within
/// a diagram's lifetime.
///
/// The edge store never holds self-loops or parallel edges: adding an edge
/// that would create one instead applies the corresponding mod-2 edge rule
/// (two Hadamard edges cancel against a factor 1/2, a Hadamard self-loop
/// becomes a pi phase and a factor 1/sqrt 2, and so on), with the scalar
/// updated exactly.
class ZxDiagram {
public:
    ZxDiagram() = default;

    Vid add_vertex(VKind kind, Phase phase = Phase{}) {
        Vid id = static_cast<Vid>(verts_.size());
        verts_.push_back({kind, phase, true});
        grow_rows();
        return id;
    }

    /// Creates a vertex with a caller-chosen id (used by deserialization);
    /// ids below it that do not exist yet become permanently dead holes.
    Vid add_vertex_with_id(Vid id, VKind kind, Phase phase = Phase{}) {
        while (verts_.size() <= id) {
            verts_.push_back({VKind::ZSpider, Phase{}, false});
            grow_rows();
        }
        if (verts_[id].alive) throw ZxError(Err::ParseError, "duplicate vertex id");
        verts_[id] = {kind, phase, true};
        return id;
    }

    [[nodiscard]] std::size_t capacity() const { return verts_.size(); }
    [[nodiscard]] bool alive(Vid v) const { return v < verts_.size() && verts_[v].alive; }
    [[nodiscard]] VKind kind(Vid v) const { return verts_[v].kind; }
    [[nodiscard]] bool is_spider(Vid v) const { return alive(v) && verts_[v].kind == VKind::ZSpider; }
    [[nodiscard]] bool is_boundary(Vid v) const { return alive(v) && verts_[v].kind == VKind::Boundary; }

    [[nodiscard]] const Phase& phase(Vid v) const { return verts_[v].phase; }
    void set_phase(Vid v, Phase p) {
        require_spider(v, "set_phase");
        verts_[v].phase = p;
    }
    void add_phase(Vid v, const Phase& p) {
        require_spider(v, "add_phase");
        verts_[v].phase += p;
    }
    void add_phase_pi4(Vid v, int k) { add_phase(v, Phase::pi4(k)); }

    Scalar& scalar() { return scalar_; }
    [[nodiscard]] const Scalar& scalar() const { return scalar_; }

    std::vector<Vid>& inputs() { return inputs_; }
    std::vector<Vid>& outputs() { return outputs_; }
    [[nodiscard]] const std::vector<Vid>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<Vid>& outputs() const { return outputs_; }

    [[nodiscard]] bool is_closed() const { return inputs_.empty() && outputs_.empty() && n_boundaries() == 0; }

    [[nodiscard]] std::size_t n_spiders() const {
        std::size_t n = 0;
        for (const auto& v : verts_) n += (v.alive && v.kind == VKind::ZSpider);
        return n;
    }
    [[nodiscard]] std::size_t n_boundaries() const {
        std::size_t n = 0;
        for (const auto& v : verts_) n += (v.alive && v.kind == VKind::Boundary);
        return n;
    }

    [[nodiscard]] std::vector<Vid> vertices() const {
        std::vector<Vid> out;
        for (Vid v = 0; v < verts_.size(); ++v)
            if (verts_[v].alive) out.push_back(v);
        return out;
    }
    [[nodiscard]] std::vector<Vid> spiders() const {
        std::vector<Vid> out;
        for (Vid v = 0; v < verts_.size(); ++v)
            if (verts_[v].alive && verts_[v].kind == VKind::ZSpider) out.push_back(v);
        return out;
    }

    [[nodiscard]] bool has_hadamard_edge(Vid u, Vid v) const { return hadj_[u].test(v); }
    [[nodiscard]] bool has_plain_edge(Vid u, Vid v) const {
        const auto& p = padj_[u];
        return std::find(p.begin(), p.end(), v) != p.end();
    }
    [[nodiscard]] bool has_edge(Vid u, Vid v) const {
        return has_hadamard_edge(u, v) || has_plain_edge(u, v);
    }

    [[nodiscard]] const Bitset& hadamard_neighbors(Vid v) const { return hadj_[v]; }
    [[nodiscard]] const std::vector<Vid>& plain_neighbors(Vid v) const { return padj_[v]; }

    [[nodiscard]] std::size_t degree(Vid v) const { return hadj_[v].count() + padj_[v].size(); }

    [[nodiscard]] std::vector<Vid> neighbors(Vid v) const {
        std::vector<Vid> out;
        hadj_[v].for_each([&](std::size_t u) { out.push_back(static_cast<Vid>(u)); });
        out.insert(out.end(), padj_[v].begin(), padj_[v].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All edges as (u, v, kind) with u < v, sorted.
    [[nodiscard]] std::vector<std::tuple<Vid, Vid, EdgeKind>> edges() const {
        std::vector<std::tuple<Vid, Vid, EdgeKind>> out;
        for (Vid u = 0; u < verts_.size(); ++u) {
            if (!verts_[u].alive) continue;
            hadj_[u].for_each([&](std::size_t v) {
                if (u < v) out.emplace_back(u, static_cast<Vid>(v), EdgeKind::Hadamard);
            });
            for (Vid v : padj_[u])
                if (u < v) out.emplace_back(u, v, EdgeKind::Plain);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] std::size_t n_hadamard_edges() const {
        std::size_t n = 0;
        for (Vid u = 0; u < verts_.size(); ++u)
            if (verts_[u].alive) n += hadj_[u].count();
        return n / 2;
    }

    void add_edge(Vid u, Vid v, EdgeKind k) {
        if (!alive(u) || !alive(v)) throw ZxError(Err::ParseError, "edge endpoint not alive");
        if (u == v) {
            require_spider(u, "self-loop");
            if (k == EdgeKind::Hadamard) {
                verts_[u].phase += Phase::pi4(4);
                scalar_.mul_sqrt2_power(-1);
            }
            return;  // plain self-loop is an identity factor
        }
        bool had = has_hadamard_edge(u, v);
        bool pl = has_plain_edge(u, v);
        if (is_boundary(u) && degree(u) > 0 && !had && !pl)
            throw ZxError(Err::NotGraphLike, "boundary vertex degree would exceed 1");
        if (is_boundary(v) && degree(v) > 0 && !had && !pl)
            throw ZxError(Err::NotGraphLike, "boundary vertex degree would exceed 1");
        if (k == EdgeKind::Hadamard) {
            if (had) {
                // Parallel Hadamard pair cancels mod 2.
                unlink_hadamard(u, v);
                scalar_.mul_sqrt2_power(-2);
            } else if (pl) {
                // A Hadamard edge on top of a plain edge acts as a pi phase
                // on the shared value plus a factor 1/sqrt 2.
                add_pi_to_either(u, v);
                scalar_.mul_sqrt2_power(-1);
            } else {
                hadj_[u].set(v);
                hadj_[v].set(u);
            }
        } else {
            if (pl) {
                // Parallel plain edges are one plain edge.
            } else if (had) {
                unlink_hadamard(u, v);
                link_plain(u, v);
                add_pi_to_either(u, v);
                scalar_.mul_sqrt2_power(-1);
            } else {
                link_plain(u, v);
            }
        }
    }

    void remove_edge(Vid u, Vid v) {
        if (hadj_[u].test(v)) {
            unlink_hadamard(u, v);
        } else {
            unlink_plain(u, v);
        }
    }

    void remove_vertex(Vid v) {
        hadj_[v].for_each([&](std::size_t u) { hadj_[u].reset(v); });
        hadj_[v].clear();
        for (Vid u : padj_[v]) unlink_plain_oneway(u, v);
        padj_[v].clear();
        verts_[v].alive = false;
    }

    /// Fuses spider `t` into spider `u` along an existing plain edge: phases
    /// add, t's edges move to u with the mod-2 edge rules applied.
    void fuse(Vid u, Vid t) {
        require_spider(u, "fuse");
        require_spider(t, "fuse");
        if (!has_plain_edge(u, t)) throw ZxError(Err::NotGraphLike, "fuse requires a plain edge");
        unlink_plain(u, t);
        verts_[u].phase += verts_[t].phase;
        std::vector<Vid> hn;
        hadj_[t].for_each([&](std::size_t x) { hn.push_back(static_cast<Vid>(x)); });
        for (Vid x : hn) {
            unlink_hadamard(t, x);
            if (x == u) {
                verts_[u].phase += Phase::pi4(4);
                scalar_.mul_sqrt2_power(-1);
            } else {
                add_edge(u, x, EdgeKind::Hadamard);
            }
        }
        std::vector<Vid> pn = padj_[t];
        for (Vid y : pn) {
            unlink_plain(t, y);
            if (y != u) add_edge(u, y, EdgeKind::Plain);
        }
        verts_[t].alive = false;
    }

    /// Turns a boundary vertex into a phased spider in place (state
    /// plugging); its single edge is kept.
    void convert_boundary_to_spider(Vid b, Phase p) {
        if (!is_boundary(b)) throw ZxError(Err::NotGraphLike, "convert: not a boundary");
        verts_[b].kind = VKind::ZSpider;
        verts_[b].phase = p;
    }

    /// XORs the Hadamard adjacency row of v with `mask` (used for local
    /// complementation); the diagonal bit is kept clear and symmetry is the
    /// caller's responsibility.
    void xor_hadamard_row(Vid v, const Bitset& mask) {
        hadj_[v] ^= mask;
        hadj_[v].reset(v);
    }

    [[nodiscard]] Bitset empty_mask() const { return Bitset(verts_.size()); }

    [[nodiscard]] Bitset spider_mask() const {
        Bitset m(verts_.size());
        for (Vid v = 0; v < verts_.size(); ++v)
            if (verts_[v].alive && verts_[v].kind == VKind::ZSpider) m.set(v);
        return m;
    }
    [[nodiscard]] Bitset boundary_mask() const {
        Bitset m(verts_.size());
        for (Vid v = 0; v < verts_.size(); ++v)
            if (verts_[v].alive && verts_[v].kind == VKind::Boundary) m.set(v);
        return m;
    }

    /// Graph-like form: all spider-spider edges are Hadamard edges, boundary
    /// vertices have degree exactly 1 and phase 0.
    [[nodiscard]] bool is_graph_like() const {
        for (Vid v = 0; v < verts_.size(); ++v) {
            if (!verts_[v].alive) continue;
            if (verts_[v].kind == VKind::Boundary) {
                if (degree(v) != 1 || !verts_[v].phase.is_zero()) return false;
            } else {
                for (Vid y : padj_[v])
                    if (is_spider(y)) return false;
            }
        }
        return true;
    }

    void check_graph_like(const char* ctx) const {
        if (!is_graph_like()) throw ZxError(Err::NotGraphLike, ctx);
    }

private:
    struct VertexData {
        VKind kind;
        Phase phase;
        bool alive;
    };

    void require_spider(Vid v, const char* ctx) const {
        if (!is_spider(v)) throw ZxError(Err::NotGraphLike, std::string(ctx) + ": not a spider");
    }

    void add_pi_to_either(Vid u, Vid v) {
        if (is_spider(u))
            verts_[u].phase += Phase::pi4(4);
        else if (is_spider(v))
            verts_[v].phase += Phase::pi4(4);
        else
            throw ZxError(Err::NotGraphLike, "parallel edges between two boundaries");
    }

    void link_plain(Vid u, Vid v) {
        padj_[u].push_back(v);
        padj_[v].push_back(u);
    }
    void unlink_plain_oneway(Vid u, Vid v) {
        auto& p = padj_[u];
        p.erase(std::remove(p.begin(), p.end(), v), p.end());
    }
    void unlink_plain(Vid u, Vid v) {
        unlink_plain_oneway(u, v);
        unlink_plain_oneway(v, u);
    }
    void unlink_hadamard(Vid u, Vid v) {
        hadj_[u].reset(v);
        hadj_[v].reset(u);
    }

    void grow_rows() {
        std::size_t n = verts_.size();
        hadj_.emplace_back();
        padj_.emplace_back();
        for (auto& row : hadj_) row.resize(n);
    }

    std::vector<VertexData> verts_;
    std::vector<Bitset> hadj_;
    std::vector<std::vector<Vid>> padj_;
    std::vector<Vid> inputs_;
    std::vector<Vid> outputs_;
    Scalar scalar_;
};

}  // namespace zxrw
