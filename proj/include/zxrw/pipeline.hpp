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

#include "zxrw/contract.hpp"
#include "zxrw/heuristics.hpp"
#include "zxrw/oracle.hpp"
#include "zxrw/plug.hpp"

namespace zxrw {

enum class Method { Flow, GreedyLinear, GreedyB2T, TCount, Best, Oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Flow: return "rw-flow";
        case Method::GreedyLinear: return "rw-greedy-linear";
        case Method::GreedyB2T: return "rw-greedy-b2t";
        case Method::TCount: return "rw-tcount";
        case Method::Best: return "best";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Method> method_from_string(const std::string& s) {
    if (s == "flow") return Method::Flow;
    if (s == "greedy-linear") return Method::GreedyLinear;
    if (s == "greedy-b2t") return Method::GreedyB2T;
    if (s == "tcount") return Method::TCount;
    if (s == "best") return Method::Best;
    if (s == "oracle") return Method::Oracle;
    return std::nullopt;
}

struct SimResult {
    std::complex<double> amplitude;
    std::size_t width = 0;
    BigUint flop_count;
    Method method_used = Method::Best;
    ContractStats stats;
};

namespace detail {

/// A decomposed closed diagram ready for contraction.
struct Plan {
    ZxDiagram diagram;
    DecompositionTree tree;
    std::size_t width = 0;
    BigUint flop_count;
    Method method = Method::Best;
    bool degenerate = false;  // 0/1 spiders: contract directly
};

inline Plan make_degenerate_plan(ZxDiagram d, Method m) {
    Plan plan;
    plan.degenerate = d.n_spiders() == 0;
    if (d.n_spiders() == 1) {
        plan.tree.add_node(0);
        plan.flop_count = BigUint(1);
    }
    plan.diagram = std::move(d);
    plan.method = m;
    return plan;
}

inline Plan plan_from_tree(ZxDiagram d, DecompositionTree t, Method m) {
    Plan plan;
    plan.diagram = std::move(d);
    plan.width = t.width();
    plan.flop_count = flops(t);
    plan.tree = std::move(t);
    plan.method = m;
    return plan;
}

/// Flow plan: order the open reduced diagram by gflow, plug, drop deleted
/// vertices from the order, recompute ranks on the plugged graph.
inline Plan flow_plan(const ZxDiagram& open_reduced, const std::vector<uint8_t>& x,
                      const std::vector<uint8_t>& y) {
    auto gf = find_gflow_for_diagram(open_reduced);
    if (!gf) throw ZxError(Err::GFlowUnavailable, "no extended gflow on the reduced diagram");
    LinearOrder p_open = rw_flow(gf->og, gf->flow);
    PlugRecord rec;
    ZxDiagram closed = plug_states_tracked(open_reduced, x, y, rec);
    if (closed.n_spiders() <= 1) return make_degenerate_plan(std::move(closed), Method::Flow);
    UGraph g2 = UGraph::from_diagram(closed);
    std::vector<int> idx(closed.capacity(), -1);
    for (std::size_t i = 0; i < g2.n; ++i) idx[g2.names[i]] = static_cast<int>(i);
    std::vector<std::size_t> order;
    for (std::size_t pos : p_open.order) {
        Vid id = gf->og.g.names[pos];
        if (idx[id] >= 0) order.push_back(static_cast<std::size_t>(idx[id]));
    }
    if (order.size() != g2.n) throw ZxError(Err::DecompositionMismatch, "plugging changed vertices unexpectedly");
    auto lin = make_linear_order(g2, order);
    return plan_from_tree(std::move(closed), linear_to_tree(g2, lin), Method::Flow);
}

inline Plan closed_plan(const ZxDiagram& closed_reduced, Method m) {
    if (closed_reduced.n_spiders() <= 1)
        return make_degenerate_plan(closed_reduced, m);
    UGraph g = UGraph::from_diagram(closed_reduced);
    switch (m) {
        case Method::GreedyLinear:
            return plan_from_tree(closed_reduced, linear_to_tree(g, rw_greedy_linear(g)), m);
        case Method::GreedyB2T:
            return plan_from_tree(closed_reduced, rw_greedy_b2t(g), m);
        case Method::TCount:
            return plan_from_tree(closed_reduced, rw_tcount(closed_reduced, g), m);
        default:
            throw ZxError(Err::ParseError, "closed_plan: bad method");
    }
}

inline std::complex<double> run_plan(const Plan& plan, const ContractOptions& opts) {
    if (plan.degenerate) return plan.diagram.scalar().to_complex();
    return contract(plan.diagram, plan.tree, opts);
}

}  // namespace detail

/// End to end: convert, reduce (open), order with gflow if requested, plug
/// the basis states, reduce again when closed, decompose, contract.
inline SimResult simulate_amplitude(const Circuit& c, const std::vector<uint8_t>& x,
                                    const std::vector<uint8_t>& y, Method method,
                                    ContractOptions opts = {},
                                    std::size_t oracle_cap = kDefaultOracleCap) {
    ZxDiagram d = circuit_to_diagram(c);
    full_reduce(d);
    SimResult res;
    res.method_used = method;
    opts.stats = &res.stats;
    if (method == Method::Oracle) {
        ZxDiagram closed = plug_states(d, x, y);
        res.amplitude = oracle_scalar(closed, oracle_cap);
        return res;
    }
    auto closed_reduced = [&]() {
        ZxDiagram closed = plug_states(d, x, y);
        full_reduce(closed);
        return closed;
    };
    std::optional<detail::Plan> plan;
    if (method == Method::Flow) {
        plan = detail::flow_plan(d, x, y);
    } else if (method == Method::Best) {
        std::vector<detail::Plan> candidates;
        try {
            candidates.push_back(detail::flow_plan(d, x, y));
        } catch (const ZxError& e) {
            if (e.code() != Err::GFlowUnavailable) throw;
        }
        ZxDiagram closed = closed_reduced();
        for (Method m : {Method::GreedyLinear, Method::GreedyB2T, Method::TCount})
            candidates.push_back(detail::closed_plan(closed, m));
        for (auto& cand : candidates)
            if (!plan || cand.flop_count < plan->flop_count) plan = std::move(cand);
    } else {
        plan = detail::closed_plan(closed_reduced(), method);
    }
    res.amplitude = detail::run_plan(*plan, opts);
    res.width = plan->width;
    res.flop_count = plan->flop_count;
    res.method_used = plan->method;
    return res;
}

}  // namespace zxrw
