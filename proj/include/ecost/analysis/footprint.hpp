#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecost/analysis/oracle.hpp"
#include "ecost/core/problem.hpp"

namespace ecost {

class InadmissibleHeuristic : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class CostHeuristic { admissible, search };

inline Cost cost_estimate(const HeuristicValues& h, CostHeuristic which) {
    return which == CostHeuristic::admissible ? h.h_c_admissible : h.h_c;
}

struct HeuristicAudit {
    bool admissible = true;
    bool consistent = true;
    bool zero_at_goals = true;
    std::string first_violation;

    bool ok() const { return admissible && consistent && zero_at_goals; }
};

/// Edge-wise consistency and oracle admissibility of one cost heuristic over the whole space.
template <SearchProblem P>
HeuristicAudit audit_cost_heuristic(const P& problem, const StateSpace<P>& space,
                                    CostHeuristic which = CostHeuristic::admissible) {
    HeuristicAudit audit;
    const auto h_star = optimal_cost_to_go(space);
    std::vector<Cost> h(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) h[i] = cost_estimate(problem.heuristics(space.states[i]), which);
    auto note = [&](const std::string& msg) {
        if (audit.first_violation.empty()) audit.first_violation = msg;
    };
    for (std::size_t u = 0; u < space.size(); ++u) {
        const auto& label = problem.state_label(space.states[u]);
        if (h[u] < 0) {
            audit.admissible = false;
            note("negative estimate at " + label);
        }
        if (space.goal[u] && h[u] != 0) {
            audit.zero_at_goals = false;
            note("nonzero estimate at goal " + label);
        }
        if (h_star[u] != kInfiniteCost && h[u] > h_star[u]) {
            audit.admissible = false;
            note("h=" + std::to_string(h[u]) + " exceeds h*=" + std::to_string(h_star[u]) + " at " + label);
        }
        for (const auto& a : space.arcs[u])
            if (h[u] > a.cost + h[a.target]) {
                audit.consistent = false;
                note("inconsistent on edge " + problem.action_label(a.action) + " from " + label);
            }
    }
    return audit;
}

template <typename State>
struct FootprintReport {
    Cost f_star = 0;
    std::vector<State> strict_set;    // states whose best f_c is below f_star
    std::vector<State> boundary_set;  // states whose best f_c equals f_star
    std::uint64_t reachable_states = 0;
};

/// Classifies every reachable state by its minimal f_c = g* + h_c_admissible.
/// Throws InadmissibleHeuristic unless h_c_admissible is verified consistent and admissible.
template <SearchProblem P>
FootprintReport<typename P::State> compute_footprint(const P& problem, std::uint64_t cap) {
    auto space = enumerate_states(problem, cap);
    auto audit = audit_cost_heuristic(problem, space, CostHeuristic::admissible);
    if (!audit.ok()) throw InadmissibleHeuristic("footprint requires a consistent admissible h_c: " + audit.first_violation);
    const auto g = optimal_cost_to_reach(space);
    const auto h_star = optimal_cost_to_go(space);
    if (h_star[0] == kInfiniteCost) throw std::runtime_error("footprint: instance is unsolvable");

    FootprintReport<typename P::State> r;
    r.f_star = h_star[0];
    r.reachable_states = space.size();
    for (std::size_t i = 0; i < space.size(); ++i) {
        Cost f = g[i] + problem.heuristics(space.states[i]).h_c_admissible;
        if (f < r.f_star)
            r.strict_set.push_back(space.states[i]);
        else if (f == r.f_star)
            r.boundary_set.push_back(space.states[i]);
    }
    std::sort(r.strict_set.begin(), r.strict_set.end());
    std::sort(r.boundary_set.begin(), r.boundary_set.end());
    return r;
}

}  // namespace ecost
