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

#include <cctype>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "zxrw/diagram.hpp"
#include "zxrw/errors.hpp"

namespace zxrw {

enum class GateKind : uint8_t { H, X, Z, S, Sdg, T, Tdg, Rz, Rx, Cnot, Cz };

struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;  // target for cnot, second qubit for cz
    double theta = 0.0;

    static Gate one(GateKind k, int q, double theta = 0.0) { return {k, q, -1, theta}; }
    static Gate two(GateKind k, int a, int b) { return {k, a, b, 0.0}; }
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void validate() const {
        for (const auto& g : gates) {
            bool two = g.kind == GateKind::Cnot || g.kind == GateKind::Cz;
            if (g.q0 < 0 || g.q0 >= n_qubits || (two && (g.q1 < 0 || g.q1 >= n_qubits)))
                throw ZxError(Err::ParseError, "gate qubit index out of range");
            if (two && g.q0 == g.q1) throw ZxError(Err::ParseError, "control equals target");
        }
    }

    [[nodiscard]] std::size_t t_count() const {
        std::size_t t = 0;
        for (const auto& g : gates) {
            if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++t;
            if (g.kind == GateKind::Rz || g.kind == GateKind::Rx) {
                if (!Phase::radians(g.theta).is_clifford()) ++t;
            }
        }
        return t;
    }
};

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::Rz: return "rz";
        case GateKind::Rx: return "rx";
        case GateKind::Cnot: return "cnot";
        case GateKind::Cz: return "cz";
    }
    return "?";
}

/// Plain-text gate list, one gate per line (`h 0`, `cnot 0 1`, `t 2`,
/// `rz 1 0.785398`). Lines starting with '#' are comments; an optional
/// `qubits N` line pins the qubit count, otherwise max index + 1 is used.
inline std::string write_circuit_text(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    char buf[64];
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::Cnot:
            case GateKind::Cz:
                out += std::string(gate_name(g.kind)) + " " + std::to_string(g.q0) + " " +
                       std::to_string(g.q1) + "\n";
                break;
            case GateKind::Rz:
            case GateKind::Rx:
                std::snprintf(buf, sizeof buf, "%s %d %.17g\n", gate_name(g.kind), g.q0, g.theta);
                out += buf;
                break;
            default:
                out += std::string(gate_name(g.kind)) + " " + std::to_string(g.q0) + "\n";
        }
    }
    return out;
}

inline Circuit parse_circuit_text(const std::string& text) {
    Circuit c;
    int max_q = -1;
    bool explicit_n = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        auto fail = [&](const std::string& m) -> ZxError {
            return ZxError(Err::ParseError, "line " + std::to_string(lineno) + ": " + m);
        };
        auto read_int = [&]() {
            int v;
            if (!(ls >> v) || v < 0) throw fail("expected qubit index");
            max_q = std::max(max_q, v);
            return v;
        };
        if (op == "qubits") {
            if (!(ls >> c.n_qubits) || c.n_qubits < 0) throw fail("bad qubit count");
            explicit_n = true;
        } else if (op == "h" || op == "x" || op == "z" || op == "s" || op == "sdg" || op == "t" ||
                   op == "tdg") {
            GateKind k = op == "h"   ? GateKind::H
                         : op == "x" ? GateKind::X
                         : op == "z" ? GateKind::Z
                         : op == "s" ? GateKind::S
                         : op == "sdg" ? GateKind::Sdg
                         : op == "t" ? GateKind::T
                                     : GateKind::Tdg;
            c.gates.push_back(Gate::one(k, read_int()));
        } else if (op == "rz" || op == "rx") {
            int q = read_int();
            double theta;
            if (!(ls >> theta)) throw fail("expected angle");
            c.gates.push_back(Gate::one(op == "rz" ? GateKind::Rz : GateKind::Rx, q, theta));
        } else if (op == "cnot" || op == "cx" || op == "cz") {
            int a = read_int();
            int b = read_int();
            c.gates.push_back(Gate::two(op == "cz" ? GateKind::Cz : GateKind::Cnot, a, b));
        } else {
            throw ZxError(Err::UnsupportedGate, "line " + std::to_string(lineno) + ": " + op);
        }
    }
    if (!explicit_n) c.n_qubits = max_q + 1;
    c.validate();
    return c;
}

namespace detail {

// Angle expressions of the OpenQASM 2.0 subset: [-] (num ['*'] )? pi ('/' num)? | [-] num
inline double parse_qasm_angle(std::string expr) {
    std::erase_if(expr, [](unsigned char ch) { return std::isspace(ch); });
    double sign = 1.0;
    std::size_t i = 0;
    if (i < expr.size() && (expr[i] == '-' || expr[i] == '+')) {
        if (expr[i] == '-') sign = -1.0;
        ++i;
    }
    auto read_num = [&]() -> double {
        std::size_t start = i;
        while (i < expr.size() && (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '.' ||
                                   expr[i] == 'e' || expr[i] == 'E' ||
                                   ((expr[i] == '+' || expr[i] == '-') && i > start &&
                                    (expr[i - 1] == 'e' || expr[i - 1] == 'E'))))
            ++i;
        if (start == i) throw ZxError(Err::ParseError, "bad angle: " + expr);
        return std::stod(expr.substr(start, i - start));
    };
    double value;
    bool saw_pi = false;
    if (expr.compare(i, 2, "pi") == 0) {
        value = std::numbers::pi;
        saw_pi = true;
        i += 2;
    } else {
        value = read_num();
        if (i < expr.size() && expr[i] == '*') ++i;
        if (expr.compare(i, 2, "pi") == 0) {
            value *= std::numbers::pi;
            saw_pi = true;
            i += 2;
        }
    }
    if (i < expr.size() && expr[i] == '/') {
        ++i;
        value /= read_num();
    }
    (void)saw_pi;
    if (i != expr.size()) throw ZxError(Err::ParseError, "bad angle: " + expr);
    return sign * value;
}

}  // namespace detail

/// Reader for the OpenQASM 2.0 subset covering the supported gate set: one
/// qreg, gates h/x/z/s/sdg/t/tdg/rz/rx/cx/cz. Barriers and comments are
/// ignored; anything else is rejected.
inline Circuit parse_qasm(const std::string& text) {
    Circuit c;
    std::string qreg_name;
    std::istringstream in(text);
    std::string raw;
    std::string buf;
    // Statements are ';'-terminated; strip // comments first.
    while (std::getline(in, raw)) {
        auto pos = raw.find("//");
        if (pos != std::string::npos) raw.resize(pos);
        buf += raw + "\n";
    }
    std::istringstream stmts(buf);
    std::string stmt;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    auto parse_ref = [&](std::string tok) {
        tok = trim(tok);
        auto lb = tok.find('[');
        auto rb = tok.find(']');
        if (lb == std::string::npos || rb == std::string::npos || tok.substr(0, lb) != qreg_name)
            throw ZxError(Err::ParseError, "bad qubit reference: " + tok);
        return std::stoi(tok.substr(lb + 1, rb - lb - 1));
    };
    while (std::getline(stmts, stmt, ';')) {
        stmt = trim(stmt);
        if (stmt.empty()) continue;
        if (stmt.rfind("OPENQASM", 0) == 0 || stmt.rfind("include", 0) == 0 ||
            stmt.rfind("creg", 0) == 0 || stmt.rfind("barrier", 0) == 0)
            continue;
        if (stmt.rfind("qreg", 0) == 0) {
            auto lb = stmt.find('[');
            auto rb = stmt.find(']');
            if (lb == std::string::npos || rb == std::string::npos)
                throw ZxError(Err::ParseError, "bad qreg");
            if (!qreg_name.empty()) throw ZxError(Err::ParseError, "multiple qregs unsupported");
            qreg_name = trim(stmt.substr(4, lb - 4));
            c.n_qubits = std::stoi(stmt.substr(lb + 1, rb - lb - 1));
            continue;
        }
        std::string head;
        std::string args;
        auto sp = stmt.find_first_of(" \t(");
        if (sp == std::string::npos) throw ZxError(Err::ParseError, "bad statement: " + stmt);
        head = stmt.substr(0, sp);
        double theta = 0.0;
        std::string rest = stmt.substr(sp);
        if (stmt[sp] == '(') {
            auto close = rest.find(')');
            if (close == std::string::npos) throw ZxError(Err::ParseError, "bad statement: " + stmt);
            theta = detail::parse_qasm_angle(rest.substr(1, close - 1));
            rest = rest.substr(close + 1);
        }
        args = trim(rest);
        std::vector<int> qs;
        std::istringstream as(args);
        std::string tok;
        while (std::getline(as, tok, ',')) qs.push_back(parse_ref(tok));
        if (head == "h" || head == "x" || head == "z" || head == "s" || head == "sdg" ||
            head == "t" || head == "tdg") {
            if (qs.size() != 1) throw ZxError(Err::ParseError, "bad arity: " + stmt);
            GateKind k = head == "h"   ? GateKind::H
                         : head == "x" ? GateKind::X
                         : head == "z" ? GateKind::Z
                         : head == "s" ? GateKind::S
                         : head == "sdg" ? GateKind::Sdg
                         : head == "t" ? GateKind::T
                                       : GateKind::Tdg;
            c.gates.push_back(Gate::one(k, qs[0]));
        } else if (head == "rz" || head == "rx") {
            if (qs.size() != 1) throw ZxError(Err::ParseError, "bad arity: " + stmt);
            c.gates.push_back(Gate::one(head == "rz" ? GateKind::Rz : GateKind::Rx, qs[0], theta));
        } else if (head == "cx" || head == "CX" || head == "cz") {
            if (qs.size() != 2) throw ZxError(Err::ParseError, "bad arity: " + stmt);
            c.gates.push_back(Gate::two(head == "cz" ? GateKind::Cz : GateKind::Cnot, qs[0], qs[1]));
        } else {
            throw ZxError(Err::UnsupportedGate, head);
        }
    }
    c.validate();
    return c;
}

inline void to_graph_like(ZxDiagram& d);

/// Compiles a circuit into an open graph-like ZX-diagram with n inputs and
/// n outputs. Phase gates become Z-spiders (rz(theta) = diag(1, e^{i theta})),
/// Hadamards toggle the pending edge kind of their wire, and CZ contributes
/// its two spiders, one Hadamard edge and an exact factor sqrt 2; CNOT and X
/// are built from those via Hadamard conjugation of the target wire.
inline ZxDiagram circuit_to_diagram(const Circuit& c) {
    c.validate();
    ZxDiagram d;
    int n = c.n_qubits;
    std::vector<Vid> cur(n);
    std::vector<uint8_t> pend(n, 0);
    for (int q = 0; q < n; ++q) {
        Vid b = d.add_vertex(VKind::Boundary);
        d.inputs().push_back(b);
        cur[q] = b;
    }
    auto append_spider = [&](int q, Phase p) {
        Vid v = d.add_vertex(VKind::ZSpider, p);
        d.add_edge(cur[q], v, pend[q] ? EdgeKind::Hadamard : EdgeKind::Plain);
        cur[q] = v;
        pend[q] = 0;
        return v;
    };
    auto append_cz = [&](int a, int b) {
        Vid va = append_spider(a, Phase{});
        Vid vb = append_spider(b, Phase{});
        d.add_edge(va, vb, EdgeKind::Hadamard);
        d.scalar().mul_sqrt2_power(1);
    };
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: pend[g.q0] ^= 1; break;
            case GateKind::Z: append_spider(g.q0, Phase::pi4(4)); break;
            case GateKind::S: append_spider(g.q0, Phase::pi4(2)); break;
            case GateKind::Sdg: append_spider(g.q0, Phase::pi4(6)); break;
            case GateKind::T: append_spider(g.q0, Phase::pi4(1)); break;
            case GateKind::Tdg: append_spider(g.q0, Phase::pi4(7)); break;
            case GateKind::Rz: append_spider(g.q0, Phase::radians(g.theta)); break;
            case GateKind::X:
                pend[g.q0] ^= 1;
                append_spider(g.q0, Phase::pi4(4));
                pend[g.q0] ^= 1;
                break;
            case GateKind::Rx:
                pend[g.q0] ^= 1;
                append_spider(g.q0, Phase::radians(g.theta));
                pend[g.q0] ^= 1;
                break;
            case GateKind::Cz: append_cz(g.q0, g.q1); break;
            case GateKind::Cnot:
                pend[g.q1] ^= 1;
                append_cz(g.q0, g.q1);
                pend[g.q1] ^= 1;
                break;
        }
    }
    for (int q = 0; q < n; ++q) {
        Vid b = d.add_vertex(VKind::Boundary);
        d.outputs().push_back(b);
        d.add_edge(cur[q], b, pend[q] ? EdgeKind::Hadamard : EdgeKind::Plain);
    }
    to_graph_like(d);
    return d;
}

/// Fuses away all plain spider-spider edges, normalising any diagram built
/// from Z-spiders and plain/Hadamard edges into graph-like form. Idempotent;
/// the tracked scalar absorbs every rewrite factor.
inline void to_graph_like(ZxDiagram& d) {
    // Worklist of plain spider-spider edges, processed smallest pair first so
    // the surviving vertex ids are deterministic.
    auto collect = [&](std::vector<std::pair<Vid, Vid>>& wl) {
        wl.clear();
        for (Vid v : d.spiders())
            for (Vid y : d.plain_neighbors(v))
                if (v < y && d.is_spider(y)) wl.emplace_back(v, y);
        std::sort(wl.begin(), wl.end());
    };
    std::vector<std::pair<Vid, Vid>> wl;
    collect(wl);
    while (!wl.empty()) {
        auto [u, t] = wl.front();
        if (d.is_spider(u) && d.is_spider(t) && d.has_plain_edge(u, t)) d.fuse(u, t);
        collect(wl);
    }
    d.check_graph_like("to_graph_like");
}

}  // namespace zxrw
