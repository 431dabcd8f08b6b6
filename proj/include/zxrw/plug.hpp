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

#include "zxrw/diagram.hpp"

namespace zxrw {

/// What plugging did to the vertex set, so that a precomputed vertex order
/// can be patched up: spiders that were deleted, and spiders that were newly
/// created next to a surviving host.
struct PlugRecord {
    std::vector<Vid> deleted;
    std::vector<std::pair<Vid, Vid>> inserted;  // (host, new spider); host == NO_HOST for bare wires
    static constexpr Vid kNoHost = static_cast<Vid>(-1);
};

namespace detail {

inline std::pair<Vid, EdgeKind> boundary_edge(const ZxDiagram& d, Vid b) {
    const auto& h = d.hadamard_neighbors(b);
    if (h.count() + d.plain_neighbors(b).size() != 1)
        throw ZxError(Err::NotGraphLike, "boundary vertex must have degree 1");
    if (h.count() == 1) {
        Vid t = 0;
        h.for_each([&](std::size_t u) { t = static_cast<Vid>(u); });
        return {t, EdgeKind::Hadamard};
    }
    return {d.plain_neighbors(b)[0], EdgeKind::Plain};
}

}  // namespace detail

/// Plugs computational-basis states onto all boundaries, producing a closed
/// diagram whose value is the <y|C|x> entry of the open diagram's tensor.
/// Plugging a bit through a Hadamard boundary edge adds bit*pi to the
/// adjacent spider's phase; through a plain edge it fixes the spider's value,
/// deleting it. Only deletions and phase changes happen, never insertions.
inline ZxDiagram plug_states_tracked(const ZxDiagram& d, const std::vector<uint8_t>& x,
                                     const std::vector<uint8_t>& y, PlugRecord& rec) {
    if (x.size() != d.inputs().size() || y.size() != d.outputs().size())
        throw ZxError(Err::LengthMismatch, "plug_states bit counts");
    d.check_graph_like("plug_states");
    ZxDiagram out = d;
    rec = PlugRecord{};

    std::map<Vid, uint8_t> bit;
    for (std::size_t i = 0; i < x.size(); ++i) bit[d.inputs()[i]] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) bit[d.outputs()[i]] = y[i];
    if (bit.size() != d.inputs().size() + d.outputs().size())
        throw ZxError(Err::NotGraphLike, "a vertex is both input and output boundary");

    std::map<Vid, uint8_t> fix;  // spider -> forced value (from plain boundary edges)
    std::vector<Vid> boundaries;
    for (auto& [b, v] : bit) boundaries.push_back(b);

    // Boundary-boundary wires first.
    std::map<Vid, bool> done;
    for (Vid b : boundaries) {
        if (done[b]) continue;
        auto [t, k] = detail::boundary_edge(out, b);
        if (!out.is_boundary(t)) continue;
        done[b] = done[t] = true;
        uint8_t bb = bit.at(b), bt = bit.at(t);
        if (k == EdgeKind::Plain) {
            if (bb != bt) out.scalar().set_zero();
        } else {
            out.scalar().mul_sqrt2_power(-1);
            if (bb && bt) out.scalar().mul_complex({-1.0, 0.0});
        }
        out.remove_vertex(b);
        out.remove_vertex(t);
    }
    // Boundary-spider edges.
    for (Vid b : boundaries) {
        if (done[b]) continue;
        auto [t, k] = detail::boundary_edge(out, b);
        uint8_t v = bit.at(b);
        if (k == EdgeKind::Hadamard) {
            if (v) out.add_phase_pi4(t, 4);
            out.scalar().mul_sqrt2_power(-1);
        } else {
            auto it = fix.find(t);
            if (it != fix.end()) {
                if (it->second != v) out.scalar().set_zero();
            } else {
                fix[t] = v;
            }
        }
        out.remove_vertex(b);
    }
    // Apply forced spider values: the spider vanishes, its phase contributes
    // e^{i alpha v}, and each Hadamard edge leaves a 1/sqrt 2 plus a pi
    // phase kick on the (unfixed) neighbour when v = 1.
    for (auto& [t, v] : fix) {
        if (v) out.scalar().mul_phase(out.phase(t));
        std::vector<Vid> hs;
        out.hadamard_neighbors(t).for_each([&](std::size_t u) { hs.push_back(static_cast<Vid>(u)); });
        for (Vid u : hs) {
            auto it = fix.find(u);
            if (it != fix.end()) {
                if (t < u) {  // fixed-fixed edge handled once
                    out.scalar().mul_sqrt2_power(-1);
                    if (v && it->second) out.scalar().mul_complex({-1.0, 0.0});
                }
            } else {
                out.scalar().mul_sqrt2_power(-1);
                if (v) out.add_phase_pi4(u, 4);
            }
        }
        if (!out.plain_neighbors(t).empty())
            throw ZxError(Err::NotGraphLike, "plain spider-spider edge during plugging");
    }
    for (auto& [t, v] : fix) {
        out.remove_vertex(t);
        rec.deleted.push_back(t);
    }
    out.inputs().clear();
    out.outputs().clear();
    return out;
}

inline ZxDiagram plug_states(const ZxDiagram& d, const std::vector<uint8_t>& x,
                             const std::vector<uint8_t>& y) {
    PlugRecord rec;
    return plug_states_tracked(d, x, y, rec);
}

inline std::vector<uint8_t> parse_bits(const std::string& s) {
    std::vector<uint8_t> out;
    for (char c : s) {
        if (c != '0' && c != '1') throw ZxError(Err::ParseError, "bitstring: " + s);
        out.push_back(c == '1');
    }
    return out;
}

/// Plugs phase states (|0> + e^{i gamma} |1>)/sqrt 2 onto all boundaries
/// (gamma = pi/4 gives T-states). A plain boundary edge fuses the phase into
/// the adjacent spider; a Hadamard edge turns the boundary vertex itself into
/// a new phase-gamma spider (a phase-gadget-style leaf next to its host).
inline ZxDiagram plug_phase_states_tracked(const ZxDiagram& d, const std::vector<Phase>& in_ph,
                                           const std::vector<Phase>& out_ph, PlugRecord& rec) {
    if (in_ph.size() != d.inputs().size() || out_ph.size() != d.outputs().size())
        throw ZxError(Err::LengthMismatch, "plug_phase_states counts");
    d.check_graph_like("plug_phase_states");
    ZxDiagram out = d;
    rec = PlugRecord{};

    std::map<Vid, Phase> ph;
    for (std::size_t i = 0; i < in_ph.size(); ++i) ph[d.inputs()[i]] = in_ph[i];
    for (std::size_t i = 0; i < out_ph.size(); ++i) ph[d.outputs()[i]] = out_ph[i];
    if (ph.size() != d.inputs().size() + d.outputs().size())
        throw ZxError(Err::NotGraphLike, "a vertex is both input and output boundary");

    std::map<Vid, bool> done;
    for (auto& [b, gamma] : ph) {
        if (done[b]) continue;
        auto [t, k] = detail::boundary_edge(out, b);
        out.scalar().mul_sqrt2_power(-1);
        if (out.is_boundary(t)) {
            done[b] = done[t] = true;
            out.scalar().mul_sqrt2_power(-1);
            Phase g2 = ph.at(t);
            if (k == EdgeKind::Plain) {
                out.remove_vertex(t);
                out.convert_boundary_to_spider(b, gamma + g2);
                rec.inserted.emplace_back(PlugRecord::kNoHost, b);
            } else {
                out.convert_boundary_to_spider(b, gamma);
                out.convert_boundary_to_spider(t, g2);
                rec.inserted.emplace_back(PlugRecord::kNoHost, b);
                rec.inserted.emplace_back(PlugRecord::kNoHost, t);
            }
        } else if (k == EdgeKind::Plain) {
            out.add_phase(t, gamma);
            out.remove_vertex(b);
        } else {
            out.convert_boundary_to_spider(b, gamma);
            rec.inserted.emplace_back(t, b);
        }
    }
    out.inputs().clear();
    out.outputs().clear();
    return out;
}

inline ZxDiagram plug_phase_states(const ZxDiagram& d, const Phase& gamma) {
    PlugRecord rec;
    std::vector<Phase> in_ph(d.inputs().size(), gamma);
    std::vector<Phase> out_ph(d.outputs().size(), gamma);
    return plug_phase_states_tracked(d, in_ph, out_ph, rec);
}

}  // namespace zxrw
