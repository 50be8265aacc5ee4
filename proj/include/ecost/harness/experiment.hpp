#pragma once

#include <optional>
#include <string>

#include "ecost/evaluators/epsilon.hpp"
#include "ecost/harness/config.hpp"
#include "ecost/harness/records.hpp"
#include "ecost/search/engine.hpp"

namespace ecost {

struct RunOutcome {
    std::string config_hash;
    std::string instance;
    Termination termination = Termination::budget;
    std::optional<Cost> best_cost;
    std::uint64_t expansions = 0;
};

/// Runs one configured search, streaming a header line, one line per incumbent, and a metrics line.
inline RunOutcome run_experiment(const ExperimentConfig& cfg, JsonLinesWriter& out, bool timing = false) {
    return visit_domain(cfg, [&](const auto& problem) {
        RunOutcome outcome;
        outcome.config_hash = config_hash(cfg);
        outcome.instance = problem.key();
        auto eps = epsilon_of(problem);
        out.write(Json{{"type", "run"},
                       {"config_hash", outcome.config_hash},
                       {"config", to_json(cfg)},
                       {"instance", outcome.instance},
                       {"epsilon", to_string(eps.epsilon)},
                       {"c_max", eps.c_max}});

        SearchOptions options;
        options.reopen = cfg.reopen;
        std::size_t index = 0;
        auto result = run_search(problem, cfg.evaluator, cfg.budget, options, [&](const auto& rec) {
            out.write(incumbent_json(problem, rec, index++, timing));
        });

        Json summary = metrics_json(result.metrics, timing);
        summary["type"] = "metrics";
        summary["config_hash"] = outcome.config_hash;
        summary["domain"] = cfg.domain;
        summary["instance"] = outcome.instance;
        summary["evaluator"] = describe(cfg.evaluator);
        if (const auto* best = result.best()) {
            summary["best_cost"] = best->cost;
            summary["best_size"] = best->size;
            outcome.best_cost = best->cost;
        } else {
            summary["best_cost"] = nullptr;
            summary["best_size"] = nullptr;
        }
        out.write(summary);
        outcome.termination = result.metrics.termination;
        outcome.expansions = result.metrics.expansions;
        return outcome;
    });
}

}  // namespace ecost
