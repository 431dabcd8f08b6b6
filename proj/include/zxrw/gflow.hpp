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

#include <optional>
#include <string>
#include <vector>

#include "zxrw/graph.hpp"

namespace zxrw {

enum class Plane : uint8_t { XY, XZ, YZ };

inline const char* plane_name(Plane p) {
    switch (p) {
        case Plane::XY: return "XY";
        case Plane::XZ: return "XZ";
        case Plane::YZ: return "YZ";
    }
    return "?";
}

/// Open graph (G, I, O) over dense indices.
struct OpenGraph {
    UGraph g;
    Bitset inputs;
    Bitset outputs;

    [[nodiscard]] std::size_t n() const { return g.n; }
};

/// Correction function, measurement-plane labelling, and an integer layer
/// per vertex inducing the strict partial order: smaller layer before
/// larger, ties unordered. Outputs carry the maximal layer and no g/plane.
struct ExtendedGFlow {
    std::vector<Bitset> g;       // correction set per vertex; empty for outputs
    std::vector<int> layer;      // measurement order
    std::vector<Plane> planes;   // plane per non-output vertex
};

/// Odd neighbourhood: vertices with an odd number of neighbours in S.
inline Bitset odd_neighbourhood(const UGraph& g, const Bitset& s) {
    Bitset out(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
        std::size_t c = 0;
        s.for_each([&](std::size_t u) { c += g.adj.get(v, u); });
        if (c % 2 == 1) out.set(v);
    }
    return out;
}

struct GFlowViolation {
    std::size_t vertex = 0;
    int condition = 0;  // 0: structural (domain/codomain), 1..5: the defining conditions
    std::string message;
};

/// Checks the five defining conditions (plus domain/codomain shape) for
/// every non-output vertex; reports the first violation found.
inline bool verify_gflow(const OpenGraph& og, const ExtendedGFlow& f,
                         GFlowViolation* violation = nullptr) {
    auto fail = [&](std::size_t v, int cond, const std::string& msg) {
        if (violation) *violation = {v, cond, msg};
        return false;
    };
    const auto& g = og.g;
    if (f.g.size() != g.n || f.layer.size() != g.n || f.planes.size() != g.n) {
        if (violation) *violation = {0, 0, "shape mismatch"};
        return false;
    }
    auto prec = [&](std::size_t i, std::size_t j) { return f.layer[i] < f.layer[j]; };
    for (std::size_t v = 0; v < g.n; ++v) {
        if (og.outputs.test(v)) continue;
        const Bitset& s = f.g[v];
        if (s.size() != g.n || s.none()) return fail(v, 0, "empty correction set");
        if (s.intersects(og.inputs)) return fail(v, 0, "correction set touches inputs");
        bool cond_ok = true;
        s.for_each([&](std::size_t j) {
            if (j != v && !prec(v, j)) cond_ok = false;
        });
        if (!cond_ok) return fail(v, 1, "g(v) not after v");
        Bitset odd = odd_neighbourhood(g, s);
        cond_ok = true;
        odd.for_each([&](std::size_t j) {
            if (j != v && !prec(v, j)) cond_ok = false;
        });
        if (!cond_ok) return fail(v, 2, "Odd(g(v)) not after v");
        bool in_s = s.test(v);
        bool in_odd = odd.test(v);
        switch (f.planes[v]) {
            case Plane::XY:
                if (in_s || !in_odd) return fail(v, 3, "XY needs v notin g(v), v in Odd(g(v))");
                break;
            case Plane::XZ:
                if (!in_s || !in_odd) return fail(v, 4, "XZ needs v in g(v), v in Odd(g(v))");
                break;
            case Plane::YZ:
                if (!in_s || in_odd) return fail(v, 5, "YZ needs v in g(v), v notin Odd(g(v))");
                break;
        }
    }
    return true;
}

/// Maximally-delayed extended gflow construction, layer by layer from the
/// outputs, solving one GF(2) system per layer and reusing its elimination
/// for every candidate vertex. Absence of a gflow is a value, not an error.
inline std::optional<ExtendedGFlow> find_gflow(const OpenGraph& og, const std::vector<Plane>& planes) {
    const UGraph& g = og.g;
    std::size_t n = g.n;
    if (planes.size() != n) throw ZxError(Err::DimensionMismatch, "find_gflow planes");
    std::vector<int> round(n, -1);
    std::vector<Bitset> corr(n, Bitset(n));
    Bitset processed(n);
    std::size_t n_processed = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (og.outputs.test(v)) {
            round[v] = 0;
            processed.set(v);
            ++n_processed;
        }
    int r = 0;
    while (n_processed < n) {
        ++r;
        // Candidate correction columns: processed non-inputs.
        std::vector<std::size_t> cols;
        for (std::size_t v = 0; v < n; ++v)
            if (processed.test(v) && !og.inputs.test(v)) cols.push_back(v);
        std::vector<std::size_t> rows;  // unprocessed vertices
        for (std::size_t v = 0; v < n; ++v)
            if (!processed.test(v)) rows.push_back(v);
        BitMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (g.adj.get(rows[i], cols[j])) m.set(i, j, true);
        auto sys = ReducedSystem::from(m);
        std::vector<std::size_t> newly;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::size_t u = rows[i];
            Bitset target(rows.size());
            bool self_in_s = planes[u] != Plane::XY;
            if (self_in_s && og.inputs.test(u)) continue;  // g(u) may not touch inputs
            if (planes[u] == Plane::XY) {
                target.set(i);
            } else {
                // S = {u} + S': cancel u's neighbourhood on the unprocessed
                // side; row u demands v in Odd(S) (XZ) or not (YZ).
                for (std::size_t k = 0; k < rows.size(); ++k)
                    if (k != i && g.adj.get(rows[k], u)) target.set(k);
                if (planes[u] == Plane::XZ) target.flip(i);
            }
            auto x = sys.solve(target);
            if (!x) continue;
            Bitset s(n);
            x->for_each([&](std::size_t j) { s.set(cols[j]); });
            if (self_in_s) s.set(u);
            corr[u] = s;
            round[u] = r;
            newly.push_back(u);
        }
        if (newly.empty()) return std::nullopt;
        for (std::size_t u : newly) {
            processed.set(u);
            ++n_processed;
        }
    }
    // Re-map so that smaller layers are measured first; outputs end up last.
    ExtendedGFlow f;
    f.g = std::move(corr);
    f.layer.resize(n);
    f.planes = planes;
    for (std::size_t v = 0; v < n; ++v) f.layer[v] = r - round[v];
    for (std::size_t v = 0; v < n; ++v)
        if (og.outputs.test(v)) f.g[v] = Bitset(n);
    return f;
}

/// Measurement planes a reduced diagram implies: phase-gadget leaves are YZ,
/// everything else XY.
inline std::vector<Plane> planes_from_diagram(const ZxDiagram& d, const UGraph& g) {
    std::vector<Plane> planes(g.n, Plane::XY);
    for (std::size_t i = 0; i < g.n; ++i) {
        Vid v = g.names[i];
        if (d.degree(v) == 1) {
            auto ns = d.neighbors(v);
            if (d.is_spider(ns[0])) planes[i] = Plane::YZ;
        }
    }
    return planes;
}

/// Open graph of an open graph-like diagram: spiders adjacent to input
/// (output) boundaries form I (O).
inline OpenGraph open_graph_from_diagram(const ZxDiagram& d) {
    OpenGraph og;
    og.g = UGraph::from_diagram(d);
    og.inputs = Bitset(og.g.n);
    og.outputs = Bitset(og.g.n);
    std::vector<int> idx(d.capacity(), -1);
    for (std::size_t i = 0; i < og.g.n; ++i) idx[og.g.names[i]] = static_cast<int>(i);
    auto mark = [&](const std::vector<Vid>& bs, Bitset& set) {
        for (Vid b : bs) {
            if (!d.is_boundary(b)) throw ZxError(Err::NotGraphLike, "boundary list corrupt");
            for (Vid t : d.neighbors(b))
                if (idx[t] >= 0) set.set(static_cast<std::size_t>(idx[t]));
        }
    };
    mark(d.inputs(), og.inputs);
    mark(d.outputs(), og.outputs);
    return og;
}

inline std::optional<ExtendedGFlow> find_gflow(const OpenGraph& og) {
    return find_gflow(og, std::vector<Plane>(og.g.n, Plane::XY));
}

struct DiagramGFlow {
    OpenGraph og;
    std::vector<Plane> planes;
    ExtendedGFlow flow;
};

/// Extended gflow of an open reduced diagram, trying the implied planes
/// first (YZ on phase-gadget leaves) and falling back to all-XY: degree-1
/// spiders created organically by pivoting admit the XY reading.
inline std::optional<DiagramGFlow> find_gflow_for_diagram(const ZxDiagram& d) {
    DiagramGFlow r;
    r.og = open_graph_from_diagram(d);
    r.planes = planes_from_diagram(d, r.og.g);
    auto f = find_gflow(r.og, r.planes);
    if (!f) {
        r.planes.assign(r.og.g.n, Plane::XY);
        f = find_gflow(r.og, r.planes);
    }
    if (!f) return std::nullopt;
    r.flow = std::move(*f);
    return r;
}

}  // namespace zxrw
