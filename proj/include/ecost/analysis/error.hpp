#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <vector>

#include "ecost/analysis/footprint.hpp"
#include "ecost/core/problem.hpp"
#include "ecost/search/metrics.hpp"

namespace ecost {

/// Reference solution x used to measure heuristic error: its total cost and size.
struct ReferenceSolution {
    Cost cost = 0;
    Size size = 0;
};

struct ErrorRecord {
    Cost e_c = 0;  // f_c(x) - f_c(n)
    Size e_s = 0;  // f_s(x) - f_s(n)
    ReferenceSolution reference;
};

inline ErrorRecord heuristic_error(Cost g_cost, Size g_size, const HeuristicValues& h, const ReferenceSolution& x,
                                   CostHeuristic which = CostHeuristic::search) {
    return {x.cost - (g_cost + cost_estimate(h, which)), x.size - (g_size + h.h_s), x};
}

template <typename State, typename Action>
ErrorRecord heuristic_error(const ExpansionRecord<State, Action>& n, const ReferenceSolution& x,
                            CostHeuristic which = CostHeuristic::search) {
    return heuristic_error(n.g_cost, n.g_size, n.h, x, which);
}

/// Cheap-subspace depth explored beneath one node entered by an expensive action.
template <typename State>
struct SubspaceDepth {
    std::uint32_t node = 0;
    State state{};
    Cost g_cost = 0;
    Size g_size = 0;
    HeuristicValues h;
    Size depth = 0;  // deepest expanded descendant reached through cheap actions only
};

/// Scans a trace prefix (expansions before `stop` only) and reports, for every expanded node whose
/// last action is expensive, how deep the search went beneath it using cheap actions alone.
template <typename State, typename Action>
std::vector<SubspaceDepth<State>> cheap_subspace_depths(const std::vector<ExpansionRecord<State, Action>>& trace,
                                                        std::size_t stop,
                                                        const std::function<bool(const Action&)>& is_cheap) {
    stop = std::min(stop, trace.size());
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < stop; ++i) row_of.emplace(trace[i].node, i);

    std::vector<SubspaceDepth<State>> out;
    std::unordered_map<std::uint32_t, std::size_t> slot_of;
    for (std::size_t i = 0; i < stop; ++i) {
        const auto& r = trace[i];
        if (r.action && !is_cheap(*r.action)) {
            slot_of.emplace(r.node, out.size());
            out.push_back({r.node, r.state, r.g_cost, r.g_size, r.h, 0});
        }
    }
    for (std::size_t i = 0; i < stop; ++i) {
        const auto* r = &trace[i];
        Size depth = 0;
        while (r->action && is_cheap(*r->action)) {
            auto it = row_of.find(r->parent);
            if (it == row_of.end()) break;
            r = &trace[it->second];
            ++depth;
        }
        if (!r->action || is_cheap(*r->action)) continue;
        auto& slot = out[slot_of.at(r->node)];
        slot.depth = std::max(slot.depth, depth);
    }
    return out;
}

/// Longest cheap-action-only shortest distance from `start`: how deep its cheap subspace goes at all.
template <SearchProblem P>
Size cheap_subspace_eccentricity(const P& problem, const typename P::State& start,
                                 const std::function<bool(const typename P::Action&)>& is_cheap, std::uint64_t cap) {
    using State = typename P::State;
    std::unordered_map<State, Size> depth{{start, 0}};
    std::deque<State> queue{start};
    std::vector<EdgeOf<P>> scratch;
    Size deepest = 0;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        scratch.clear();
        problem.successors(s, scratch);
        for (const auto& e : scratch) {
            if (!is_cheap(e.action) || depth.contains(e.target)) continue;
            Size d = depth[s] + 1;
            depth.emplace(e.target, d);
            deepest = std::max(deepest, d);
            if (depth.size() > cap) throw CapExceeded("cheap subspace exceeds cap");
            queue.push_back(e.target);
        }
    }
    return deepest;
}

}  // namespace ecost
