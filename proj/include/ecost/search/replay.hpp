#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

template <SearchProblem P>
struct ReplayOutcome {
    typename P::State final_state;
    Cost cost = 0;
    Size size = 0;
    bool reaches_goal = false;
};

/// Re-applies a plan through the child generator from the initial state.
/// Returns nullopt if some action is not applicable along the way.
template <SearchProblem P>
std::optional<ReplayOutcome<P>> replay(const P& problem, std::span<const typename P::Action> plan) {
    ReplayOutcome<P> out{problem.initial_state()};
    std::vector<EdgeOf<P>> edges;
    for (const auto& action : plan) {
        edges.clear();
        problem.successors(out.final_state, edges);
        const EdgeOf<P>* taken = nullptr;
        for (const auto& e : edges)
            if (e.action == action) {
                taken = &e;
                break;
            }
        if (!taken) return std::nullopt;
        out.final_state = taken->target;
        out.cost += taken->cost;
        ++out.size;
    }
    out.reaches_goal = problem.is_goal(out.final_state);
    return out;
}

}  // namespace ecost
