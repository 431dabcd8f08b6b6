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

#include <fstream>
#include <numeric>
#include <string>

#include <json.hpp>

#include "zxrw/diagram.hpp"

namespace zxrw {

using json = nlohmann::ordered_json;

namespace detail {

inline json phase_to_json(const Phase& p) {
    json j = json::object();
    int num = p.pi4_numerator();
    int den = 4;
    int g = std::gcd(num == 0 ? 4 : num, den);
    j["num"] = num / g;
    j["den"] = den / g;
    if (p.generic()) j["real"] = *p.generic();
    return j;
}

inline Phase phase_from_json(const json& j) {
    Phase p;
    if (j.contains("num")) {
        long num = j.at("num").get<long>();
        long den = j.at("den").get<long>();
        if (den == 0) throw ZxError(Err::ParseError, "phase denominator 0");
        if ((4 * num) % den == 0) {
            p = Phase::pi4(static_cast<int>(((4 * num / den) % 8 + 8) % 8));
        } else {
            p = Phase::radians(static_cast<double>(num) / static_cast<double>(den) *
                               std::numbers::pi);
        }
    }
    if (j.contains("real")) p = p + Phase::radians(j.at("real").get<double>());
    return p;
}

}  // namespace detail

/// Structured JSON form of a diagram: vertices (id, kind, phase as a
/// fraction of pi plus an optional real part), edges, boundary lists and the
/// tracked scalar. Round trips are bit-exact.
inline json diagram_to_json(const ZxDiagram& d) {
    json j;
    j["vertices"] = json::array();
    for (Vid v : d.vertices()) {
        json jv;
        jv["id"] = v;
        jv["kind"] = d.is_boundary(v) ? "boundary" : "z";
        if (!d.is_boundary(v)) jv["phase"] = detail::phase_to_json(d.phase(v));
        j["vertices"].push_back(jv);
    }
    j["edges"] = json::array();
    for (auto [u, v, k] : d.edges()) {
        json je;
        je["u"] = u;
        je["v"] = v;
        je["kind"] = k == EdgeKind::Hadamard ? "hadamard" : "plain";
        j["edges"].push_back(je);
    }
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    j["scalar"] = {{"re", d.scalar().value.real()},
                   {"im", d.scalar().value.imag()},
                   {"sqrt2_power", d.scalar().sqrt2_power}};
    return j;
}

inline ZxDiagram diagram_from_json(const json& j) {
    ZxDiagram d;
    try {
        for (const auto& jv : j.at("vertices")) {
            Vid id = jv.at("id").get<Vid>();
            std::string kind = jv.at("kind").get<std::string>();
            if (kind == "boundary") {
                d.add_vertex_with_id(id, VKind::Boundary);
            } else if (kind == "z") {
                Phase p;
                if (jv.contains("phase")) p = detail::phase_from_json(jv.at("phase"));
                d.add_vertex_with_id(id, VKind::ZSpider, p);
            } else {
                throw ZxError(Err::ParseError, "unknown vertex kind: " + kind);
            }
        }
        for (const auto& je : j.at("edges")) {
            std::string kind = je.at("kind").get<std::string>();
            if (kind != "hadamard" && kind != "plain")
                throw ZxError(Err::ParseError, "unknown edge kind: " + kind);
            d.add_edge(je.at("u").get<Vid>(), je.at("v").get<Vid>(),
                       kind == "hadamard" ? EdgeKind::Hadamard : EdgeKind::Plain);
        }
        for (const auto& b : j.at("inputs")) d.inputs().push_back(b.get<Vid>());
        for (const auto& b : j.at("outputs")) d.outputs().push_back(b.get<Vid>());
        const auto& js = j.at("scalar");
        d.scalar().value = {js.at("re").get<double>(), js.at("im").get<double>()};
        d.scalar().sqrt2_power = js.at("sqrt2_power").get<int>();
    } catch (const json::exception& e) {
        throw ZxError(Err::ParseError, std::string("diagram json: ") + e.what());
    }
    return d;
}

inline std::string diagram_to_json_string(const ZxDiagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

inline ZxDiagram diagram_from_json_string(const std::string& s) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& e) {
        throw ZxError(Err::ParseError, std::string("diagram json: ") + e.what());
    }
    return diagram_from_json(j);
}

}  // namespace zxrw

#include "zxrw/decomposition.hpp"

namespace zxrw {

/// Decomposition JSON: tree nodes with their leaf map, edges with cut-ranks,
/// the width and the exact flop count. `vertex_names` maps graph indices
/// back to diagram vertex ids.
inline json decomposition_to_json(const DecompositionTree& t, const UGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (std::size_t v = 0; v < t.n_nodes(); ++v) {
        json jn;
        jn["id"] = v;
        if (t.leaf_vertex[v] >= 0) {
            jn["leaf_of"] = t.leaf_vertex[v];
            jn["vertex"] = g.names[static_cast<std::size_t>(t.leaf_vertex[v])];
        }
        j["nodes"].push_back(jn);
    }
    j["edges"] = json::array();
    for (const auto& [key, r] : t.rank) {
        json je;
        je["a"] = key.first;
        je["b"] = key.second;
        je["rank"] = r;
        j["edges"].push_back(je);
    }
    j["vertex_names"] = g.names;
    j["width"] = t.width();
    j["flops"] = flops(t).to_string();
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ZxError(Err::ParseError, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ZxError(Err::ParseError, "cannot write " + path);
    out << content;
}

}  // namespace zxrw
