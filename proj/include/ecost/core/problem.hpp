#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecost {

/// Edge costs are non-negative integers; zero is rejected at validation.
using Cost = std::int64_t;

/// Path length in edges.
using Size = std::int64_t;

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

/// Raised when a model violates its contract (zero-cost edges, bad parameters).
class InvalidModel : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the engine detects a broken internal invariant.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Raised by exhaustive analyses when the reachable space exceeds the cap.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The heuristic family a model exposes for one state.
struct HeuristicValues {
    Cost h_c = 0;             // cost-to-go estimate used by cost-valued evaluators
    Size h_s = 0;             // remaining depth to the nearest goal
    Size h_s_hat = 0;         // remaining depth along the cheapest completion
    Cost h_c_admissible = 0;  // lower bound on the optimal cost-to-go, used for pruning

    friend bool operator==(const HeuristicValues&, const HeuristicValues&) = default;
};

/// One outgoing edge produced by a child generator.
template <typename State, typename Action>
struct Edge {
    State target;
    Action action;
    Cost cost;
};

/// Cost of one action type, used to derive epsilon.
struct ActionCost {
    std::string name;
    Cost cost;
};

/// Implicit graph contract consumed by the engine and the analyses.
///
/// Successors must be produced in the domain's canonical, deterministic order.
template <typename P>
concept SearchProblem =
    std::regular<typename P::State> && std::totally_ordered<typename P::State> &&
    std::equality_comparable<typename P::Action> &&
    requires(const P& p, const typename P::State& s, const typename P::Action& a,
             std::vector<Edge<typename P::State, typename P::Action>>& out) {
        { std::hash<typename P::State>{}(s) } -> std::convertible_to<std::size_t>;
        { p.initial_state() } -> std::convertible_to<typename P::State>;
        { p.is_goal(s) } -> std::convertible_to<bool>;
        { p.successors(s, out) };
        { p.heuristics(s) } -> std::convertible_to<HeuristicValues>;
        { p.cost_table() } -> std::convertible_to<std::vector<ActionCost>>;
        { p.state_label(s) } -> std::convertible_to<std::string>;
        { p.action_label(a) } -> std::convertible_to<std::string>;
        { p.key() } -> std::convertible_to<std::string>;
    };

template <SearchProblem P>
using EdgeOf = Edge<typename P::State, typename P::Action>;

inline Cost max_cost(std::span<const ActionCost> table) {
    Cost m = 0;
    for (const auto& a : table) m = std::max(m, a.cost);
    return m;
}

/// Rejects empty cost tables and non-positive costs.
inline void validate_cost_table(std::span<const ActionCost> table) {
    if (table.empty()) throw InvalidModel("model declares no action types");
    for (const auto& a : table)
        if (a.cost < 1)
            throw InvalidModel("action '" + a.name + "' has cost " + std::to_string(a.cost) +
                               "; edge costs must be >= 1");
}

}  // namespace ecost
