#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ecost/domains/counter.hpp"
#include "ecost/search/engine.hpp"

namespace ecost {

struct GoalSweepRow {
    std::uint32_t goal = 0;
    Rational fraction;  // goal / 2^k
    std::uint64_t discovery_a = 0;
    std::uint64_t discovery_b = 0;
    Cost first_cost_a = 0;
    Cost first_cost_b = 0;
};

struct CrossoverReport {
    /// Last goal fraction at which b still needs at least `ratio_threshold` times a's discovery effort.
    std::optional<Rational> ratio_break;
    /// First goal fraction past the ratio break at which b discovers no later than a.
    std::optional<Rational> lead_change;
    Rational ratio_threshold;
};

struct GoalSweep {
    int k = 0;
    std::vector<GoalSweepRow> rows;
    CrossoverReport crossover;
};

/// Goals 0, step, 2*step, ... below 2^k.
inline std::vector<std::uint32_t> sweep_goal_list(int k, std::uint32_t step) {
    if (step == 0) throw std::invalid_argument("sweep step must be positive");
    std::vector<std::uint32_t> goals;
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); g += step) goals.push_back(static_cast<std::uint32_t>(g));
    return goals;
}

/// Locates where evaluator b stops being `threshold` times slower than a, and where it overtakes a.
inline CrossoverReport find_crossover(int k, const std::vector<GoalSweepRow>& rows, const Rational& threshold) {
    CrossoverReport r;
    r.ratio_threshold = threshold;
    const Rational n(std::int64_t{1} << k);
    std::size_t break_at = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (Rational(static_cast<std::int64_t>(rows[i].discovery_b)) >=
            threshold * Rational(static_cast<std::int64_t>(rows[i].discovery_a))) {
            r.ratio_break = Rational(rows[i].goal) / n;
            break_at = i;
        }
    if (!r.ratio_break) return r;
    for (std::size_t i = break_at + 1; i < rows.size(); ++i)
        if (rows[i].discovery_b <= rows[i].discovery_a) {
            r.lead_change = Rational(rows[i].goal) / n;
            break;
        }
    return r;
}

/// Runs both evaluators on counter(k, goal) with h = 0 until first discovery, for every listed goal.
inline GoalSweep sweep_goals(int k, const EvaluatorConfig& a, const EvaluatorConfig& b,
                             const std::vector<std::uint32_t>& goals, const Rational& ratio_threshold,
                             const std::function<void(const GoalSweepRow&)>& on_row = {}) {
    if (k < 2 || k > 16) throw std::invalid_argument("sweep_goals: k must lie in [2,16]");
    GoalSweep sweep;
    sweep.k = k;
    SearchBudget budget;
    budget.prove_optimality = false;
    budget.max_expansions = std::uint64_t{4} << k;
    for (auto goal : goals) {
        CounterDomain problem(k, goal);
        auto ra = run_search(problem, a, budget);
        auto rb = run_search(problem, b, budget);
        if (!ra.best() || !rb.best()) throw InvariantViolation("sweep_goals: a counter goal was not discovered");
        GoalSweepRow row{goal,
                         Rational(static_cast<std::int64_t>(goal), std::int64_t{1} << k),
                         *ra.metrics.discovery_expansions(),
                         *rb.metrics.discovery_expansions(),
                         ra.incumbents.front().cost,
                         rb.incumbents.front().cost};
        if (on_row) on_row(row);
        sweep.rows.push_back(row);
    }
    sweep.crossover = find_crossover(k, sweep.rows, ratio_threshold);
    return sweep;
}

}  // namespace ecost
