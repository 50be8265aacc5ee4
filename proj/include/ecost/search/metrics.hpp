#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

enum class Termination {
    proved,                // open list exhausted with at least one incumbent
    exhausted_unsolvable,  // open list exhausted without a solution
    budget,                // expansion or time limit reached
    first_solution,        // optimality proof not requested; stopped at the first incumbent
};

inline std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::proved: return "proved";
        case Termination::exhausted_unsolvable: return "exhausted-unsolvable";
        case Termination::budget: return "budget";
        case Termination::first_solution: return "first-solution";
    }
    return "?";
}

/// Plan-free view of one incumbent, kept in the anytime profile.
struct IncumbentSummary {
    Cost cost = 0;
    Size size = 0;
    std::uint64_t expansions_at_discovery = 0;
    std::chrono::nanoseconds wall_time_at_discovery{0};
};

template <typename Action>
struct IncumbentRecord {
    std::vector<Action> plan;
    Cost cost = 0;
    Size size = 0;
    std::uint64_t expansions_at_discovery = 0;
    std::chrono::nanoseconds wall_time_at_discovery{0};

    IncumbentSummary summary() const { return {cost, size, expansions_at_discovery, wall_time_at_discovery}; }
};

struct RunMetrics {
    std::uint64_t expansions = 0;
    std::uint64_t generations = 0;
    std::uint64_t re_expansions = 0;       // cheaper re-found paths expanded under the reopen policy
    std::uint64_t ignored_reopenings = 0;  // the same event under the ignore policy
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t pruned_by_bound = 0;
    std::uint64_t skipped_consumed = 0;  // dual lists: copies of already processed nodes
    std::uint64_t peak_open = 0;
    std::uint64_t peak_closed = 0;
    std::chrono::nanoseconds wall_time{0};
    Termination termination = Termination::budget;
    std::vector<IncumbentSummary> anytime_profile;

    /// Discovery time of the first incumbent, counting the goal pop itself as one step
    /// (a goal root is discovered at step 1).
    std::optional<std::uint64_t> discovery_expansions() const {
        if (anytime_profile.empty()) return std::nullopt;
        return anytime_profile.front().expansions_at_discovery + 1;
    }

    /// Equality over every deterministic field (wall-clock values excluded).
    bool same_counts(const RunMetrics& o) const {
        if (anytime_profile.size() != o.anytime_profile.size()) return false;
        for (std::size_t i = 0; i < anytime_profile.size(); ++i) {
            const auto& a = anytime_profile[i];
            const auto& b = o.anytime_profile[i];
            if (a.cost != b.cost || a.size != b.size || a.expansions_at_discovery != b.expansions_at_discovery)
                return false;
        }
        return expansions == o.expansions && generations == o.generations && re_expansions == o.re_expansions &&
               ignored_reopenings == o.ignored_reopenings && duplicates_dropped == o.duplicates_dropped &&
               pruned_by_bound == o.pruned_by_bound && skipped_consumed == o.skipped_consumed &&
               peak_open == o.peak_open && peak_closed == o.peak_closed && termination == o.termination;
    }
};

/// One expansion, with the arena index of the expanded node and of its parent.
template <typename State, typename Action>
struct ExpansionRecord {
    std::uint32_t node = 0;
    std::uint32_t parent = 0;
    std::optional<Action> action;
    State state{};
    Cost g_cost = 0;
    Size g_size = 0;
    HeuristicValues h;
};

template <typename State, typename Action>
struct RunResult {
    std::vector<IncumbentRecord<Action>> incumbents;
    RunMetrics metrics;
    std::vector<State> expanded_states;  // in expansion order; filled only when requested
    std::vector<ExpansionRecord<State, Action>> trace;  // filled only when requested
    std::string instance_key;

    const IncumbentRecord<Action>* best() const { return incumbents.empty() ? nullptr : &incumbents.back(); }
};

}  // namespace ecost
