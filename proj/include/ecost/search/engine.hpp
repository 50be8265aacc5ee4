#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"
#include "ecost/evaluators/config.hpp"
#include "ecost/evaluators/evaluate.hpp"
#include "ecost/search/metrics.hpp"
#include "ecost/search/node.hpp"

namespace ecost {

struct SearchBudget {
    std::optional<std::uint64_t> max_expansions;
    std::optional<std::chrono::milliseconds> max_time;
    /// Continue branch-and-bound after the first incumbent until the open list is exhausted.
    bool prove_optimality = true;
};

struct SearchOptions {
    ReopenPolicy reopen = ReopenPolicy::reopen;
    bool record_expansions = false;
    bool record_trace = false;
    /// Known upper bound on the optimal cost: nodes with g_c + h_c_admissible above it are pruned.
    std::optional<Cost> cost_bound;
};

/// Ordering key of one open-list entry.
struct OpenEntry {
    Rational f;
    Rational secondary;
    std::uint64_t insertion_serial;
    std::uint32_t node;
};

/// Strict-weak "comes later" relation for a max-heap, so the top is the next entry to pop.
class OpenEntryLater {
  public:
    explicit OpenEntryLater(TieBreak tb) : fifo_(tb == TieBreak::fifo) {}

    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.secondary != b.secondary) return a.secondary > b.secondary;
        return fifo_ ? a.insertion_serial > b.insertion_serial : a.insertion_serial < b.insertion_serial;
    }

  private:
    bool fifo_;
};

using OpenList = std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenEntryLater>;

/// Best-first branch-and-bound over an implicit graph.
///
/// Pop-time pipeline: bound test (admissible h_c), goal test, duplicate test, expansion.
/// Goal nodes are reported and never expanded. Each instance runs once.
template <SearchProblem P>
class BestFirstSearch {
  public:
    using State = typename P::State;
    using Action = typename P::Action;
    using Node = NodeOf<P>;
    using Result = RunResult<State, Action>;
    using IncumbentCallback = std::function<void(const IncumbentRecord<Action>&)>;

    BestFirstSearch(const P& problem, EvaluatorConfig config, SearchBudget budget, SearchOptions options = {})
        : problem_(problem), config_(std::move(config)), budget_(budget), options_(options) {
        validate(config_);
        auto table = problem_.cost_table();
        validate_cost_table(table);
        c_max_ = max_cost(table);
        params_ = make_params(config_, c_max_);
    }

    Result run(const IncumbentCallback& on_incumbent = {}) {
        using clock = std::chrono::steady_clock;
        const auto start = clock::now();
        Result result;
        result.instance_key = problem_.key();
        RunMetrics& m = result.metrics;

        const std::size_t n_lists = config_.dual_lists() ? 2 : 1;
        std::array<OpenList, 2> open{OpenList(OpenEntryLater(config_.tie_break)),
                                     OpenList(OpenEntryLater(config_.tie_break))};
        std::vector<Node> arena;
        ClosedMap<State> closed;
        std::vector<EdgeOf<P>> scratch;
        Cost incumbent_cost = options_.cost_bound ? *options_.cost_bound + 1 : kInfiniteCost;
        std::uint64_t serial = 0;
        std::uint64_t open_size = 0;

        auto push = [&](std::uint32_t index, const HeuristicValues& eval_h) {
            const Node& n = arena[index];
            PathMeasures g{n.g_cost, n.g_size};
            for (std::size_t l = 0; l < n_lists; ++l) {
                EvalKind kind = l == 0 ? config_.kind : *config_.second_kind;
                Evaluation e = evaluate(kind, g, eval_h, params_);
                open[l].push(OpenEntry{e.f, secondary_key(e, g, eval_h), serial++, index});
                ++open_size;
            }
            m.peak_open = std::max(m.peak_open, open_size);
        };

        arena.push_back(make_root(problem_));
        push(0, arena[0].h);

        auto time_exceeded = [&] {
            return budget_.max_time && clock::now() - start >= *budget_.max_time;
        };

        bool stopped = false;
        while (open_size > 0) {
            if ((budget_.max_expansions && m.expansions >= *budget_.max_expansions) || time_exceeded()) {
                m.termination = Termination::budget;
                stopped = true;
                break;
            }
            std::size_t l = n_lists == 2 ? dual_open_select(m.expansions) : 0;
            if (open[l].empty()) l = 1 - l;
            const OpenEntry entry = open[l].top();
            open[l].pop();
            --open_size;

            Node& node = arena[entry.node];
            if (node.consumed) {
                ++m.skipped_consumed;
                continue;
            }
            node.consumed = true;

            if (bound_test(node, incumbent_cost)) {
                ++m.pruned_by_bound;
                continue;
            }
            if (problem_.is_goal(node.state)) {
                incumbent_cost = node.g_cost;
                IncumbentRecord<Action> rec;
                rec.plan = reconstruct_plan(arena, entry.node);
                rec.cost = node.g_cost;
                rec.size = node.g_size;
                rec.expansions_at_discovery = m.expansions;
                rec.wall_time_at_discovery = clock::now() - start;
                m.anytime_profile.push_back(rec.summary());
                if (on_incumbent) on_incumbent(rec);
                result.incumbents.push_back(std::move(rec));
                if (!budget_.prove_optimality) {
                    m.termination = Termination::first_solution;
                    stopped = true;
                    break;
                }
                continue;
            }
            switch (duplicate_test(node.state, node.g_cost, closed, m.expansions)) {
                case DuplicateOutcome::drop: ++m.duplicates_dropped; continue;
                case DuplicateOutcome::reopened:
                    if (options_.reopen == ReopenPolicy::reopen)
                        ++m.re_expansions;
                    else
                        ++m.ignored_reopenings;
                    break;
                case DuplicateOutcome::fresh: break;
            }
            m.peak_closed = std::max<std::uint64_t>(m.peak_closed, closed.size());

            ++m.expansions;
            if (options_.record_expansions) result.expanded_states.push_back(node.state);
            if (options_.record_trace)
                result.trace.push_back({entry.node, node.parent, node.action, node.state, node.g_cost, node.g_size, node.h});
            if (arena.size() + 64 >= kNoParent) throw InvariantViolation("node arena exhausted");
            auto children = expand(problem_, arena[entry.node], entry.node, scratch);
            const HeuristicValues parent_h = arena[entry.node].h;
            for (auto& child : children) {
                ++m.generations;
                arena.push_back(std::move(child));
                auto index = static_cast<std::uint32_t>(arena.size() - 1);
                push(index, config_.delayed ? parent_h : arena[index].h);
            }
        }
        if (!stopped)
            m.termination = result.incumbents.empty() ? Termination::exhausted_unsolvable : Termination::proved;
        m.wall_time = clock::now() - start;
        return result;
    }

    Cost c_max() const { return c_max_; }

  private:
    Rational secondary_key(const Evaluation& e, PathMeasures g, const HeuristicValues& h) const {
        switch (config_.tie_break) {
            case TieBreak::lifo:
            case TieBreak::fifo: return e.h_term;
            case TieBreak::cost_secondary: return Rational(g.g_cost + h.h_c);
            case TieBreak::size_secondary: return Rational(g.g_size + h.h_s_hat);
        }
        return e.h_term;
    }

    const P& problem_;
    EvaluatorConfig config_;
    SearchBudget budget_;
    SearchOptions options_;
    Cost c_max_ = 1;
    EvalParams params_;
};

/// Validates the budget and runs one search.
template <SearchProblem P>
RunResult<typename P::State, typename P::Action> run_search(
    const P& problem, const EvaluatorConfig& config, const SearchBudget& budget, const SearchOptions& options = {},
    const typename BestFirstSearch<P>::IncumbentCallback& on_incumbent = {}) {
    if (!budget.prove_optimality && !budget.max_expansions && !budget.max_time)
        throw InvalidConfig("budget", "set a finite limit or request an optimality proof");
    BestFirstSearch<P> search(problem, config, budget, options);
    return search.run(on_incumbent);
}

}  // namespace ecost
