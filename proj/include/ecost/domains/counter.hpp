#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"

namespace ecost {

/// A k-bit counter driven by increment/decrement; overflow in either direction
/// costs 2^(k-1), every other step costs 1.
class CounterDomain {
  public:
    using State = std::uint32_t;
    enum class Action : std::uint8_t { increment, decrement };

    /// `zero` is the blind heuristic; `exact` is the perfect (consistent) one.
    enum class HeuristicMode { zero, exact };

    CounterDomain(int k, std::uint32_t goal, HeuristicMode mode = HeuristicMode::zero) : k_(k), goal_(goal), mode_(mode) {
        if (k < 2 || k > 30) throw InvalidModel("counter: k must lie in [2, 30], got " + std::to_string(k));
        if (goal >= modulus()) throw InvalidModel("counter: goal " + std::to_string(goal) + " outside [0, 2^k)");
    }

    int k() const { return k_; }
    State goal() const { return goal_; }
    std::uint32_t modulus() const { return 1U << k_; }
    Cost wrap_cost() const { return Cost{1} << (k_ - 1); }
    Cost step_cost() const { return 1; }

    State initial_state() const { return 0; }
    bool is_goal(State s) const { return s == goal_; }

    /// Increment first, then decrement.
    void successors(State s, std::vector<Edge<State, Action>>& out) const {
        const State top = modulus() - 1;
        out.push_back({s == top ? 0U : s + 1, Action::increment, s == top ? wrap_cost() : step_cost()});
        out.push_back({s == 0 ? top : s - 1, Action::decrement, s == 0 ? wrap_cost() : step_cost()});
    }

    HeuristicValues heuristics(State s) const {
        if (mode_ == HeuristicMode::zero) return {};
        auto up = upward(s);
        auto down = downward(s);
        // cheapest completion; on equal cost prefer the shorter one
        auto best = (up.cost < down.cost || (up.cost == down.cost && up.size <= down.size)) ? up : down;
        return {best.cost, std::min(up.size, down.size), best.size, best.cost};
    }

    std::vector<ActionCost> cost_table() const { return {{"step", step_cost()}, {"wrap", wrap_cost()}}; }

    std::string state_label(State s) const { return std::to_string(s); }
    std::string action_label(Action a) const { return a == Action::increment ? "inc" : "dec"; }
    std::string key() const {
        return "counter(k=" + std::to_string(k_) + ",goal=" + std::to_string(goal_) + ")";
    }

  private:
    struct Route {
        Cost cost;
        Size size;
    };

    // Completion moving only upwards (respectively downwards) around the cycle.
    Route upward(State s) const {
        if (s <= goal_) return {Cost(goal_ - s), Size(goal_ - s)};
        Size steps = Size(modulus() - s) + goal_;
        return {steps - 1 + wrap_cost(), steps};
    }
    Route downward(State s) const {
        if (s >= goal_) return {Cost(s - goal_), Size(s - goal_)};
        Size steps = Size(s) + Size(modulus() - goal_);
        return {steps - 1 + wrap_cost(), steps};
    }

    int k_;
    State goal_;
    HeuristicMode mode_;
};

/// Costs of the two minimal solutions for the goal 2^k - 2.
struct CounterSolutionCosts {
    Cost incrementing;  // 2^k - 2
    Cost wrapping;      // 2^(k-1) + 1
    Rational epsilon;   // 2^(1-k)
    Rational incrementing_normalized;
    Rational wrapping_normalized;
};

inline CounterSolutionCosts counter_solution_costs(int k) {
    if (k < 2 || k > 62) throw InvalidModel("counter_solution_costs: k must lie in [2, 62]");
    const std::int64_t c_max = std::int64_t{1} << (k - 1);
    CounterSolutionCosts r;
    r.incrementing = (std::int64_t{1} << k) - 2;
    r.wrapping = c_max + 1;
    r.epsilon = Rational(1, c_max);
    r.incrementing_normalized = Rational(r.incrementing, c_max);
    r.wrapping_normalized = Rational(r.wrapping, c_max);
    return r;
}

}  // namespace ecost
