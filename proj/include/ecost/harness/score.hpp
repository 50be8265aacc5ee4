#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"

namespace ecost {

/// What one planner variant achieved on one problem; nullopt means unsolved.
struct ProblemResult {
    std::string problem;
    std::optional<Cost> found;
};

struct ScoreRow {
    std::string problem;
    Cost best_known = 0;
    std::optional<Cost> found;
    Rational ratio{0};
    bool new_best = false;  // this result beat the supplied reference
};

struct ScoreTable {
    std::vector<ScoreRow> rows;
    Rational aggregate{0};  // percent, 100 * sum(ratio) / N
    std::vector<std::string> new_bests;
};

/// Lowers every reference cost that some result beats. Returns the problems that improved.
inline std::vector<std::string> absorb_new_bests(const std::vector<ProblemResult>& results,
                                                 std::map<std::string, Cost>& best_known) {
    std::vector<std::string> improved;
    for (const auto& r : results) {
        auto it = best_known.find(r.problem);
        if (it == best_known.end() && !r.found) continue;  // unsolved everywhere: scores 0 without a reference
        if (it == best_known.end()) throw std::invalid_argument("ipc_score: no reference cost for '" + r.problem + "'");
        if (it->second <= 0) throw std::invalid_argument("ipc_score: reference cost for '" + r.problem + "' must be positive");
        if (r.found && *r.found < it->second) {
            it->second = *r.found;
            improved.push_back(r.problem);
        }
    }
    return improved;
}

/// IPC quality score: best_known / found per problem, unsolved scoring 0.
/// A result cheaper than its reference becomes the new reference and is flagged.
inline ScoreTable ipc_score(const std::vector<ProblemResult>& results, std::map<std::string, Cost> best_known) {
    ScoreTable t;
    t.new_bests = absorb_new_bests(results, best_known);
    Rational sum{0};
    for (const auto& r : results) {
        ScoreRow row;
        row.problem = r.problem;
        if (auto it = best_known.find(r.problem); it != best_known.end()) row.best_known = it->second;
        row.found = r.found;
        if (r.found) {
            if (*r.found <= 0) throw std::invalid_argument("ipc_score: found cost must be positive");
            row.ratio = Rational(row.best_known, *r.found);
        }
        for (const auto& p : t.new_bests) row.new_best = row.new_best || p == r.problem;
        sum += row.ratio;
        t.rows.push_back(std::move(row));
    }
    if (!results.empty()) t.aggregate = Rational(100) * sum / static_cast<std::int64_t>(results.size());
    return t;
}

/// Scores several variants against one shared reference, first lowering the reference
/// with any variant's new best so that all variants are rescored consistently.
inline std::map<std::string, ScoreTable> ipc_score_variants(const std::map<std::string, std::vector<ProblemResult>>& variants,
                                                            std::map<std::string, Cost> best_known) {
    std::vector<std::string> improved;
    for (const auto& [_, results] : variants)
        for (auto& p : absorb_new_bests(results, best_known)) improved.push_back(p);
    std::map<std::string, ScoreTable> out;
    for (const auto& [name, results] : variants) {
        auto table = ipc_score(results, best_known);
        table.new_bests = improved;
        out.emplace(name, std::move(table));
    }
    return out;
}

/// Reference costs taken as the best result over all variants (unsolved everywhere: omitted).
inline std::map<std::string, Cost> best_over_variants(const std::map<std::string, std::vector<ProblemResult>>& variants) {
    std::map<std::string, Cost> best;
    for (const auto& [_, results] : variants)
        for (const auto& r : results) {
            if (!r.found) continue;
            auto [it, fresh] = best.emplace(r.problem, *r.found);
            if (!fresh && *r.found < it->second) it->second = *r.found;
        }
    return best;
}

}  // namespace ecost
