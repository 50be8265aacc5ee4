#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

/// Explicit copy of the reachable part of an implicit graph.
template <SearchProblem P>
struct StateSpace {
    struct Arc {
        std::uint32_t target;
        typename P::Action action;
        Cost cost;
    };

    std::vector<typename P::State> states;  // index 0 is the initial state, BFS order
    std::unordered_map<typename P::State, std::uint32_t> index;
    std::vector<std::vector<Arc>> arcs;
    std::vector<bool> goal;

    std::size_t size() const { return states.size(); }
};

/// Breadth-first enumeration of every reachable state; throws CapExceeded beyond `cap` states.
template <SearchProblem P>
StateSpace<P> enumerate_states(const P& problem, std::uint64_t cap) {
    StateSpace<P> space;
    std::vector<EdgeOf<P>> edges;
    auto intern = [&](const typename P::State& s) -> std::uint32_t {
        auto [it, inserted] = space.index.try_emplace(s, static_cast<std::uint32_t>(space.states.size()));
        if (inserted) {
            if (space.states.size() >= cap)
                throw CapExceeded("reachable state count exceeds cap " + std::to_string(cap));
            space.states.push_back(s);
        }
        return it->second;
    };
    intern(problem.initial_state());
    for (std::size_t i = 0; i < space.states.size(); ++i) {
        edges.clear();
        problem.successors(space.states[i], edges);
        std::vector<typename StateSpace<P>::Arc> out;
        out.reserve(edges.size());
        for (const auto& e : edges) out.push_back({intern(e.target), e.action, e.cost});
        space.arcs.push_back(std::move(out));
    }
    space.goal.resize(space.states.size());
    for (std::size_t i = 0; i < space.states.size(); ++i) space.goal[i] = problem.is_goal(space.states[i]);
    return space;
}

template <SearchProblem P>
std::uint64_t count_reachable(const P& problem, std::uint64_t cap) {
    std::unordered_map<typename P::State, bool> seen;
    std::vector<typename P::State> frontier{problem.initial_state()};
    seen.emplace(frontier.front(), true);
    std::vector<EdgeOf<P>> edges;
    while (!frontier.empty()) {
        auto s = frontier.back();
        frontier.pop_back();
        edges.clear();
        problem.successors(s, edges);
        for (const auto& e : edges) {
            if (seen.contains(e.target)) continue;
            if (seen.size() >= cap) throw CapExceeded("reachable state count exceeds cap " + std::to_string(cap));
            seen.emplace(e.target, true);
            frontier.push_back(e.target);
        }
    }
    return seen.size();
}

template <SearchProblem P>
struct OracleResult {
    bool solvable = false;
    Cost optimal_cost = 0;
    Size optimal_size_among_cheapest = 0;  // fewest edges among cost-optimal plans
    Size smallest_size = 0;                // fewest edges among all plans
    std::vector<typename P::Action> plan;  // one cost-optimal plan (shortest among them)
    std::uint64_t reachable_states = 0;
};

/// Exhaustive ground truth: lexicographic (cost, size) uniform-cost search plus breadth-first search.
template <SearchProblem P>
OracleResult<P> oracle_solve(const P& problem, std::uint64_t cap) {
    auto space = enumerate_states(problem, cap);
    OracleResult<P> r;
    r.reachable_states = space.size();
    const std::size_t n = space.size();

    using Key = std::pair<Cost, Size>;
    std::vector<Key> best(n, {kInfiniteCost, 0});
    std::vector<std::uint32_t> pred(n, 0);
    std::vector<std::optional<typename P::Action>> pred_action(n);
    using Item = std::pair<Key, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    best[0] = {0, 0};
    pq.push({best[0], 0});
    std::optional<std::uint32_t> goal_at;
    while (!pq.empty()) {
        auto [key, u] = pq.top();
        pq.pop();
        if (key != best[u]) continue;
        if (space.goal[u]) {
            goal_at = u;
            break;
        }
        for (const auto& a : space.arcs[u]) {
            Key cand{key.first + a.cost, key.second + 1};
            if (cand < best[a.target]) {
                best[a.target] = cand;
                pred[a.target] = u;
                pred_action[a.target] = a.action;
                pq.push({cand, a.target});
            }
        }
    }
    if (!goal_at) return r;
    r.solvable = true;
    r.optimal_cost = best[*goal_at].first;
    r.optimal_size_among_cheapest = best[*goal_at].second;
    for (std::uint32_t v = *goal_at; v != 0; v = pred[v]) r.plan.push_back(*pred_action[v]);
    std::reverse(r.plan.begin(), r.plan.end());

    std::vector<Size> depth(n, -1);
    std::queue<std::uint32_t> bfs;
    depth[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        auto u = bfs.front();
        bfs.pop();
        if (space.goal[u]) {
            r.smallest_size = depth[u];
            break;
        }
        for (const auto& a : space.arcs[u])
            if (depth[a.target] < 0) {
                depth[a.target] = depth[u] + 1;
                bfs.push(a.target);
            }
    }
    return r;
}

/// Optimal cost-from-start g*(v) for every reachable state (indexed like `space.states`).
template <SearchProblem P>
std::vector<Cost> optimal_cost_to_reach(const StateSpace<P>& space) {
    std::vector<Cost> g(space.size(), kInfiniteCost);
    using Item = std::pair<Cost, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    g[0] = 0;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != g[u]) continue;
        for (const auto& a : space.arcs[u])
            if (d + a.cost < g[a.target]) {
                g[a.target] = d + a.cost;
                pq.push({g[a.target], a.target});
            }
    }
    return g;
}

/// Optimal cost-to-go h*(v) for every reachable state; kInfiniteCost where no goal is reachable.
template <SearchProblem P>
std::vector<Cost> optimal_cost_to_go(const StateSpace<P>& space) {
    const std::size_t n = space.size();
    std::vector<std::vector<std::pair<std::uint32_t, Cost>>> reverse(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (const auto& a : space.arcs[u]) reverse[a.target].push_back({u, a.cost});
    std::vector<Cost> h(n, kInfiniteCost);
    using Item = std::pair<Cost, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::uint32_t v = 0; v < n; ++v)
        if (space.goal[v]) {
            h[v] = 0;
            pq.push({0, v});
        }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != h[v]) continue;
        for (auto [u, c] : reverse[v])
            if (d + c < h[u]) {
                h[u] = d + c;
                pq.push({h[u], u});
            }
    }
    return h;
}

}  // namespace ecost
