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
//
// Test-only oracle: dense statevector / unitary evaluation of circuits by
// direct gate-by-gate matrix action, fully independent of the diagram code
// paths it is used to check.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zxrw/circuit.hpp"

namespace zxrw::testsupport {

using CVec = std::vector<std::complex<double>>;

// Qubit 0 is the most significant bit of the state index.
inline void apply_gate(CVec& st, const Gate& g, int n) {
    using C = std::complex<double>;
    const double s = std::sqrt(0.5);
    auto bitpos = [&](int q) { return n - 1 - q; };
    std::size_t dim = st.size();
    auto apply1 = [&](int q, C m00, C m01, C m10, C m11) {
        std::size_t mask = std::size_t{1} << bitpos(q);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & mask) continue;
            C a = st[i], b = st[i | mask];
            st[i] = m00 * a + m01 * b;
            st[i | mask] = m10 * a + m11 * b;
        }
    };
    switch (g.kind) {
        case GateKind::H: apply1(g.q0, s, s, s, -s); break;
        case GateKind::X: apply1(g.q0, 0, 1, 1, 0); break;
        case GateKind::Z: apply1(g.q0, 1, 0, 0, -1); break;
        case GateKind::S: apply1(g.q0, 1, 0, 0, C(0, 1)); break;
        case GateKind::Sdg: apply1(g.q0, 1, 0, 0, C(0, -1)); break;
        case GateKind::T: apply1(g.q0, 1, 0, 0, std::polar(1.0, std::numbers::pi / 4)); break;
        case GateKind::Tdg: apply1(g.q0, 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)); break;
        case GateKind::Rz: apply1(g.q0, 1, 0, 0, std::polar(1.0, g.theta)); break;
        case GateKind::Rx: {
            // rx(theta) = H rz(theta) H
            apply1(g.q0, s, s, s, -s);
            apply1(g.q0, 1, 0, 0, std::polar(1.0, g.theta));
            apply1(g.q0, s, s, s, -s);
            break;
        }
        case GateKind::Cnot: {
            std::size_t cm = std::size_t{1} << bitpos(g.q0);
            std::size_t tm = std::size_t{1} << bitpos(g.q1);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & cm) && !(i & tm)) std::swap(st[i], st[i | tm]);
            break;
        }
        case GateKind::Cz: {
            std::size_t am = std::size_t{1} << bitpos(g.q0);
            std::size_t bm = std::size_t{1} << bitpos(g.q1);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & am) && (i & bm)) st[i] = -st[i];
            break;
        }
    }
}

inline CVec run_on_basis_state(const Circuit& c, std::size_t x) {
    CVec st(std::size_t{1} << c.n_qubits, {0, 0});
    st[x] = 1;
    for (const auto& g : c.gates) apply_gate(st, g, c.n_qubits);
    return st;
}

inline std::complex<double> amplitude_dense(const Circuit& c, std::size_t x, std::size_t y) {
    return run_on_basis_state(c, x)[y];
}

// Column-major dense unitary: U[y][x] = <y|C|x>. Only for small n.
inline std::vector<CVec> unitary_of(const Circuit& c) {
    std::size_t dim = std::size_t{1} << c.n_qubits;
    std::vector<CVec> u(dim, CVec(dim, {0, 0}));
    for (std::size_t x = 0; x < dim; ++x) {
        CVec col = run_on_basis_state(c, x);
        for (std::size_t y = 0; y < dim; ++y) u[y][x] = col[y];
    }
    return u;
}

inline Circuit random_circuit(int n_qubits, int n_gates, std::mt19937_64& rng,
                              bool clifford_only = false) {
    Circuit c;
    c.n_qubits = n_qubits;
    auto pick_q = [&]() { return static_cast<int>(rng() % n_qubits); };
    for (int i = 0; i < n_gates; ++i) {
        int r = static_cast<int>(rng() % (clifford_only ? 6 : 8));
        switch (r) {
            case 0: c.gates.push_back(Gate::one(GateKind::H, pick_q())); break;
            case 1: c.gates.push_back(Gate::one(GateKind::S, pick_q())); break;
            case 2: c.gates.push_back(Gate::one(GateKind::Z, pick_q())); break;
            case 3: c.gates.push_back(Gate::one(GateKind::X, pick_q())); break;
            case 4:
            case 5: {
                if (n_qubits < 2) {
                    c.gates.push_back(Gate::one(GateKind::H, pick_q()));
                    break;
                }
                int a = pick_q();
                int b = pick_q();
                while (b == a) b = pick_q();
                c.gates.push_back(Gate::two(r == 4 ? GateKind::Cnot : GateKind::Cz, a, b));
                break;
            }
            case 6: c.gates.push_back(Gate::one(GateKind::T, pick_q())); break;
            case 7: c.gates.push_back(Gate::one(GateKind::Tdg, pick_q())); break;
        }
    }
    return c;
}

}  // namespace zxrw::testsupport
