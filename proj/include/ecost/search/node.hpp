#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/evaluators/config.hpp"

namespace ecost {

inline constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

/// A path, stored as a link to its parent path in the engine's node arena.
template <typename State, typename Action>
struct SearchNode {
    std::uint32_t parent = kNoParent;
    std::optional<Action> action;
    State state{};
    Cost g_cost = 0;
    Size g_size = 0;
    HeuristicValues h;      // heuristic values of `state`, computed once at generation
    bool consumed = false;  // removed from an open list and processed

    bool is_root() const { return parent == kNoParent; }
};

template <SearchProblem P>
using NodeOf = SearchNode<typename P::State, typename P::Action>;

template <SearchProblem P>
NodeOf<P> make_root(const P& problem) {
    NodeOf<P> root;
    root.state = problem.initial_state();
    root.h = problem.heuristics(root.state);
    return root;
}

/// Children of `parent` (stored at `parent_index`), one per edge in the domain's order.
template <SearchProblem P>
std::vector<NodeOf<P>> expand(const P& problem, const NodeOf<P>& parent, std::uint32_t parent_index,
                              std::vector<EdgeOf<P>>& scratch) {
    scratch.clear();
    problem.successors(parent.state, scratch);
    std::vector<NodeOf<P>> children;
    children.reserve(scratch.size());
    for (auto& e : scratch) {
        if (e.cost < 1)
            throw InvariantViolation("edge '" + problem.action_label(e.action) + "' has non-positive cost");
        NodeOf<P> child;
        child.parent = parent_index;
        child.action = e.action;
        child.state = e.target;
        child.g_cost = parent.g_cost + e.cost;
        child.g_size = parent.g_size + 1;
        child.h = problem.heuristics(child.state);
        children.push_back(std::move(child));
    }
    return children;
}

template <SearchProblem P>
std::vector<NodeOf<P>> expand(const P& problem, const NodeOf<P>& parent, std::uint32_t parent_index = kNoParent) {
    std::vector<EdgeOf<P>> scratch;
    return expand(problem, parent, parent_index, scratch);
}

/// Action sequence of the path ending at `index`.
template <typename State, typename Action>
std::vector<Action> reconstruct_plan(const std::vector<SearchNode<State, Action>>& arena, std::uint32_t index) {
    std::vector<Action> plan;
    while (index != kNoParent && arena[index].action) {
        plan.push_back(*arena[index].action);
        index = arena[index].parent;
    }
    std::reverse(plan.begin(), plan.end());
    return plan;
}

/// True when the node cannot lead to a solution cheaper than the incumbent.
/// `h_admissible` must be a lower bound on the optimal cost-to-go.
inline bool bound_test(Cost g_cost, Cost h_admissible, Cost incumbent_cost) {
    if (incumbent_cost == kInfiniteCost) return false;
    return g_cost + h_admissible >= incumbent_cost;
}

template <typename State, typename Action>
bool bound_test(const SearchNode<State, Action>& node, Cost incumbent_cost) {
    return bound_test(node.g_cost, node.h.h_c_admissible, incumbent_cost);
}

struct ClosedEntry {
    Cost g_cost;
    std::uint64_t stamp;  // expansion counter when the entry was written
};

template <typename State>
using ClosedMap = std::unordered_map<State, ClosedEntry>;

enum class DuplicateOutcome {
    drop,      // state already closed at no greater cost
    fresh,     // first time this state is closed
    reopened,  // cheaper path to an already-closed state
};

/// Closed-list check of the pop-time pipeline; records the node's cost unless dropped.
template <typename State>
DuplicateOutcome duplicate_test(const State& state, Cost g_cost, ClosedMap<State>& closed, std::uint64_t stamp) {
    auto [it, inserted] = closed.try_emplace(state, ClosedEntry{g_cost, stamp});
    if (inserted) return DuplicateOutcome::fresh;
    if (it->second.g_cost <= g_cost) return DuplicateOutcome::drop;
    it->second = ClosedEntry{g_cost, stamp};
    return DuplicateOutcome::reopened;
}

}  // namespace ecost
