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

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "zxrw/json_io.hpp"
#include "zxrw/pipeline.hpp"

namespace zxrw {

/// Random CNOT+H+T circuit: gates drawn with probabilities 0.6/0.2/0.2 and
/// uniformly random distinct qubit choices; byte-identical per seed.
inline Circuit gen_random_cnot_h_t(int n_qubits, int n_gates, uint64_t seed) {
    if (n_qubits < 2) throw ZxError(Err::TooSmall, "gen_random_cnot_h_t needs >= 2 qubits");
    std::mt19937_64 rng(seed);
    Circuit c;
    c.n_qubits = n_qubits;
    for (int i = 0; i < n_gates; ++i) {
        uint64_t r = rng() % 10;
        if (r < 6) {
            int a = static_cast<int>(rng() % n_qubits);
            int b = static_cast<int>(rng() % (n_qubits - 1));
            if (b >= a) ++b;
            c.gates.push_back(Gate::two(GateKind::Cnot, a, b));
        } else if (r < 8) {
            c.gates.push_back(Gate::one(GateKind::H, static_cast<int>(rng() % n_qubits)));
        } else {
            c.gates.push_back(Gate::one(GateKind::T, static_cast<int>(rng() % n_qubits)));
        }
    }
    return c;
}

/// Erdos-Renyi ZX-diagram: n spiders with pi/4 phases, each pair joined by a
/// Hadamard edge with probability p; closed.
inline ZxDiagram gen_random_zx(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ZxError(Err::ParseError, "edge probability out of range");
    std::mt19937_64 rng(seed);
    ZxDiagram d;
    std::vector<Vid> vs;
    for (int i = 0; i < n; ++i) vs.push_back(d.add_vertex(VKind::ZSpider, Phase::pi4(1)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) d.add_edge(vs[i], vs[j], EdgeKind::Hadamard);
        }
    return d;
}

namespace detail {

inline void emit_ccx(Circuit& c, int a, int b, int t) {
    auto add = [&](GateKind k, int q) { c.gates.push_back(Gate::one(k, q)); };
    auto cx = [&](int x, int y) { c.gates.push_back(Gate::two(GateKind::Cnot, x, y)); };
    add(GateKind::H, t);
    cx(b, t);
    add(GateKind::Tdg, t);
    cx(a, t);
    add(GateKind::T, t);
    cx(b, t);
    add(GateKind::Tdg, t);
    cx(a, t);
    add(GateKind::T, b);
    add(GateKind::T, t);
    cx(a, b);
    add(GateKind::H, t);
    add(GateKind::T, a);
    add(GateKind::Tdg, b);
    cx(a, b);
}

/// Multi-controlled X on dirty borrowed lines: the classic 4(k-2) Toffoli
/// ladder when k-2 borrows are at hand, otherwise the recursive halving
/// through a single borrowed line.
inline void emit_mcx(Circuit& c, const std::vector<int>& controls, int target,
                     const std::vector<int>& borrows) {
    std::size_t k = controls.size();
    if (k == 0) {
        c.gates.push_back(Gate::one(GateKind::X, target));
        return;
    }
    if (k == 1) {
        c.gates.push_back(Gate::two(GateKind::Cnot, controls[0], target));
        return;
    }
    if (k == 2) {
        emit_ccx(c, controls[0], controls[1], target);
        return;
    }
    if (borrows.size() >= k - 2) {
        // V-chain: A (top), descending, bottom, ascending -- twice.
        auto top = [&]() { emit_ccx(c, controls[k - 1], borrows[k - 3], target); };
        auto desc = [&]() {
            for (std::size_t j = k - 2; j >= 2; --j) emit_ccx(c, controls[j], borrows[j - 2], borrows[j - 1]);
        };
        auto bottom = [&]() { emit_ccx(c, controls[0], controls[1], borrows[0]); };
        auto asc = [&]() {
            for (std::size_t j = 2; j <= k - 2; ++j) emit_ccx(c, controls[j], borrows[j - 2], borrows[j - 1]);
        };
        top();
        desc();
        bottom();
        asc();
        top();
        desc();
        bottom();
        asc();
        return;
    }
    if (borrows.empty()) throw ZxError(Err::TooSmall, "multi-controlled X needs a borrowed line");
    // Halving: t ^= AND(C1) parked on b, then AND(C2 + b) onto the target,
    // twice each so the borrowed line is restored.
    int b = borrows[0];
    std::size_t k1 = (k + 1) / 2;
    std::vector<int> c1(controls.begin(), controls.begin() + static_cast<std::ptrdiff_t>(k1));
    std::vector<int> c2(controls.begin() + static_cast<std::ptrdiff_t>(k1), controls.end());
    std::vector<int> c2b = c2;
    c2b.push_back(b);
    std::vector<int> borrows1 = c2;  // dirty lines for the first half
    borrows1.push_back(target);
    const std::vector<int>& borrows2 = c1;
    emit_mcx(c, c1, b, borrows1);
    emit_mcx(c, c2b, target, borrows2);
    emit_mcx(c, c1, b, borrows1);
    emit_mcx(c, c2b, target, borrows2);
}

}  // namespace detail

/// Clifford+T circuit implementing the n-qubit Toffoli (n-1 controls). For
/// n >= 4 one extra borrowed line is appended (the exact gate set cannot
/// express the bare permutation on n qubits), so the circuit acts as
/// TOF_n (x) I on n+1 qubits; the borrowed line is restored on all inputs.
inline Circuit gen_multi_toffoli(int n) {
    if (n < 3) throw ZxError(Err::TooSmall, "gen_multi_toffoli needs n >= 3");
    Circuit c;
    if (n == 3) {
        c.n_qubits = 3;
        detail::emit_ccx(c, 0, 1, 2);
        return c;
    }
    c.n_qubits = n + 1;
    std::vector<int> controls(n - 1);
    for (int i = 0; i < n - 1; ++i) controls[i] = i;
    detail::emit_mcx(c, controls, n - 1, {n});
    return c;
}

struct BenchRecord {
    std::string family;
    int n = 0;
    std::string params;
    uint64_t seed = 0;
    std::string method;
    std::size_t width = 0;
    std::string flop_count = "0";
    std::string verified;  // "", "true", "false", or "error:<kind>"
    double wall_ms = 0.0;
};

struct BenchConfig {
    std::string family;               // "random", "toffoli", "zx", "qasm"
    std::vector<int> qubits;          // random: qubit counts; toffoli/zx: sizes
    std::vector<int> gates;           // random: gate counts (3*q^2 when empty)
    std::vector<double> probs;        // zx: edge probabilities
    std::vector<std::string> files;   // qasm: circuit files
    std::vector<Method> methods{Method::Flow, Method::GreedyLinear, Method::GreedyB2T,
                                Method::TCount};
    int reps = 5;
    uint64_t seed = 1;
    bool verify = false;
    bool timings = false;
    std::size_t max_work = 30;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t threads = 0;  // 0: ZXRW_THREADS or hardware_concurrency
};

namespace detail {

struct BenchInstance {
    std::string family;
    int n = 0;
    std::string params;
    uint64_t seed = 0;
    bool t_states = false;  // plug T-states instead of |0..0>/<0..0|
    Circuit circuit;        // circuit families
    bool is_diagram = false;
    ZxDiagram diagram;      // zx family
};

inline std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

/// Runs every requested method on one instance; rows come back in method
/// order with a trailing naive-2^n row.
inline std::vector<BenchRecord> run_instance(const BenchInstance& inst, const BenchConfig& cfg) {
    std::vector<BenchRecord> rows;
    auto base_row = [&](const std::string& method) {
        BenchRecord r;
        r.family = inst.family;
        r.n = inst.n;
        r.params = inst.params;
        r.seed = inst.seed;
        r.method = method;
        return r;
    };
    ZxDiagram open_reduced;
    ZxDiagram closed_reduced;
    std::complex<double> oracle_value{0.0, 0.0};
    bool oracle_known = false;
    try {
        if (inst.is_diagram) {
            closed_reduced = inst.diagram;
            full_reduce(closed_reduced);
        } else {
            open_reduced = circuit_to_diagram(inst.circuit);
            full_reduce(open_reduced);
            if (inst.t_states)
                closed_reduced = plug_phase_states(open_reduced, Phase::pi4(1));
            else {
                std::vector<uint8_t> zeros_in(open_reduced.inputs().size(), 0);
                std::vector<uint8_t> zeros_out(open_reduced.outputs().size(), 0);
                closed_reduced = plug_states(open_reduced, zeros_in, zeros_out);
            }
            full_reduce(closed_reduced);
        }
        if (cfg.verify && closed_reduced.n_spiders() <= cfg.oracle_cap) {
            oracle_value = oracle_scalar(closed_reduced, cfg.oracle_cap);
            oracle_known = true;
        }
    } catch (const ZxError& e) {
        for (Method m : cfg.methods) {
            auto r = base_row(method_name(m));
            r.verified = std::string("error:") + err_name(e.code());
            rows.push_back(r);
        }
        return rows;
    }
    for (Method m : cfg.methods) {
        auto row = base_row(method_name(m));
        auto t0 = std::chrono::steady_clock::now();
        try {
            detail::Plan plan;
            if (m == Method::Flow) {
                if (inst.is_diagram || inst.t_states)
                    throw ZxError(Err::GFlowUnavailable, "flow needs an open circuit diagram");
                std::vector<uint8_t> zeros_in(open_reduced.inputs().size(), 0);
                std::vector<uint8_t> zeros_out(open_reduced.outputs().size(), 0);
                plan = detail::flow_plan(open_reduced, zeros_in, zeros_out);
            } else {
                plan = detail::closed_plan(closed_reduced, m);
            }
            row.width = plan.width;
            row.flop_count = plan.flop_count.to_string();
            if (oracle_known) {
                ContractOptions opts;
                opts.max_work = cfg.max_work;
                auto got = detail::run_plan(plan, opts);
                // The flow plan contracts a different (non-re-reduced) diagram,
                // so check it against its own oracle.
                auto want = (m == Method::Flow && plan.diagram.n_spiders() <= cfg.oracle_cap)
                                ? oracle_scalar(plan.diagram, cfg.oracle_cap)
                                : oracle_value;
                bool ok = std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want));
                row.verified = ok ? "true" : "false";
            }
        } catch (const ZxError& e) {
            row.verified = std::string("error:") + err_name(e.code());
        }
        auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(row);
    }
    // Statevector-equivalent reference line: 2^n flops.
    auto naive = base_row("naive");
    naive.width = static_cast<std::size_t>(inst.n);
    naive.flop_count = BigUint::pow2(static_cast<std::size_t>(inst.n)).to_string();
    rows.push_back(naive);
    return rows;
}

}  // namespace detail

inline std::vector<detail::BenchInstance> bench_instances(const BenchConfig& cfg) {
    std::vector<detail::BenchInstance> out;
    auto instance_seed = [&](std::size_t idx, int rep) {
        return cfg.seed + 1000003ull * idx + static_cast<uint64_t>(rep);
    };
    std::size_t idx = 0;
    if (cfg.family == "random") {
        for (int q : cfg.qubits) {
            std::vector<int> gates = cfg.gates;
            if (gates.empty()) gates = {3 * q * q};
            for (int g : gates) {
                for (int rep = 0; rep < cfg.reps; ++rep) {
                    detail::BenchInstance inst;
                    inst.family = "random";
                    inst.n = q;
                    inst.params = "gates=" + std::to_string(g);
                    inst.seed = instance_seed(idx, rep);
                    inst.circuit = gen_random_cnot_h_t(q, g, inst.seed);
                    out.push_back(std::move(inst));
                }
                ++idx;
            }
        }
    } else if (cfg.family == "toffoli") {
        for (int n : cfg.qubits) {
            detail::BenchInstance inst;
            inst.family = "toffoli";
            inst.n = n;
            inst.seed = cfg.seed;
            inst.t_states = true;
            inst.circuit = gen_multi_toffoli(n);
            out.push_back(std::move(inst));
            ++idx;
        }
    } else if (cfg.family == "zx") {
        for (int n : cfg.qubits) {
            for (double p : cfg.probs) {
                for (int rep = 0; rep < cfg.reps; ++rep) {
                    detail::BenchInstance inst;
                    inst.family = "zx";
                    inst.n = n;
                    inst.params = "p=" + detail::fmt_double(p);
                    inst.seed = instance_seed(idx, rep);
                    inst.is_diagram = true;
                    inst.diagram = gen_random_zx(n, p, inst.seed);
                    out.push_back(std::move(inst));
                }
                ++idx;
            }
        }
    } else if (cfg.family == "qasm") {
        for (const auto& f : cfg.files) {
            detail::BenchInstance inst;
            inst.family = "qasm";
            inst.params = "file=" + f;
            inst.seed = cfg.seed;
            inst.t_states = true;
            inst.circuit = parse_qasm(read_text_file(f));
            inst.n = inst.circuit.n_qubits;
            out.push_back(std::move(inst));
        }
    } else {
        throw ZxError(Err::ParseError, "unknown benchmark family: " + cfg.family);
    }
    return out;
}

/// Runs the sweep on a worker pool (ZXRW_THREADS caps it); rows are emitted
/// in deterministic grid order regardless of completion order, and wall
/// times are zeroed unless timings were requested so that equal seeds give
/// byte-identical CSVs.
inline std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
    auto instances = bench_instances(cfg);
    std::vector<std::vector<BenchRecord>> per_instance(instances.size());
    std::size_t n_threads = cfg.threads;
    if (n_threads == 0) {
        if (const char* env = std::getenv("ZXRW_THREADS")) n_threads = std::strtoul(env, nullptr, 10);
        if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    }
    n_threads = std::min(n_threads, instances.size() == 0 ? std::size_t{1} : instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            per_instance[i] = detail::run_instance(instances[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<BenchRecord> rows;
    for (auto& chunk : per_instance)
        for (auto& r : chunk) {
            if (!cfg.timings) r.wall_ms = 0.0;
            rows.push_back(std::move(r));
        }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRecord>& rows) {
    std::string out = "family,n,params,seed,method,width,flops,verified,wall_ms\n";
    char buf[64];
    for (const auto& r : rows) {
        out += r.family + "," + std::to_string(r.n) + "," + r.params + "," + std::to_string(r.seed) +
               "," + r.method + "," + std::to_string(r.width) + "," + r.flop_count + "," + r.verified;
        std::snprintf(buf, sizeof buf, ",%.3f\n", r.wall_ms);
        out += buf;
    }
    return out;
}

}  // namespace zxrw
