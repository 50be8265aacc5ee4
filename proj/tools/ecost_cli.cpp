// ecost: command-line driver for search runs, sweeps, scoring, and ground-truth analyses.
//
// Exit codes: 0 success, 1 invalid config, 2 budget exhausted without a solution,
// 3 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecost/ecost.hpp"

namespace fs = std::filesystem;
using namespace ecost;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvariant = 3;

struct GlobalOptions {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> max_expansions;
    std::optional<std::uint64_t> max_seconds;
    bool prove = false;
    bool timing = false;
};

Json load_json(const std::string& path) {
    if (path.empty()) throw InvalidConfig("--config", "no config file given");
    std::ifstream in(path);
    if (!in) throw InvalidConfig("--config", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidConfig("--config", "'" + path + "' is not valid JSON: " + e.what());
    }
}

ExperimentConfig load_config(const GlobalOptions& g, const std::string& path,
                             std::initializer_list<std::string_view> extra = {}) {
    auto cfg = parse_experiment(load_json(path), extra);
    if (g.seed) cfg.seed = *g.seed;
    if (g.max_expansions) cfg.budget.max_expansions = *g.max_expansions;
    if (g.max_seconds) cfg.budget.max_time = std::chrono::seconds(*g.max_seconds);
    if (g.prove) cfg.budget.prove_optimality = true;
    return cfg;
}

/// Output sink: a file under --out, or stdout.
class Sink {
  public:
    Sink(const std::string& dir, const std::string& name) {
        if (dir.empty()) return;
        fs::create_directories(dir);
        path_ = (fs::path(dir) / name).string();
        file_ = std::make_unique<std::ofstream>(path_);
        if (!*file_) throw std::runtime_error("cannot write '" + path_ + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

void print_json(const GlobalOptions& g, const std::string& name, const Json& j) {
    Sink sink(g.out, name);
    sink.stream() << j.dump(2) << '\n';
}

std::uint64_t cap_or_default(std::uint64_t cap) { return cap == 0 ? 2'000'000 : cap; }

int cmd_run(const GlobalOptions& g) {
    auto cfg = load_config(g, g.config);
    Sink sink(g.out, config_hash(cfg) + ".jsonl");
    JsonLinesWriter writer(sink.stream());
    auto outcome = run_experiment(cfg, writer, g.timing);
    if (!sink.path().empty()) std::cerr << "wrote " << sink.path() << '\n';
    if (outcome.termination == Termination::budget && !outcome.best_cost) return kExitBudget;
    return kExitOk;
}

int cmd_sweep(const GlobalOptions& g) {
    auto cfg = load_config(g, g.config, {"sweep"});
    if (cfg.domain != "counter") throw InvalidConfig("domain", "sweep supports the counter domain only");
    const Json section = cfg.extra.value("sweep", Json::object());
    detail::reject_unknown(section, "sweep", {"evaluators", "step", "ratio_threshold"});
    EvaluatorConfig a, b;
    a.kind = EvalKind::cost;
    b.kind = EvalKind::size;
    if (section.contains("evaluators")) {
        const auto& ev = section.at("evaluators");
        if (!ev.is_array() || ev.size() != 2) throw InvalidConfig("sweep.evaluators", "expected two evaluators");
        a = parse_evaluator(ev[0]);
        b = parse_evaluator(ev[1]);
    }
    auto step = section.contains("step") ? detail::json_int(section.at("step"), "sweep.step") : 1;
    if (step < 1) throw InvalidConfig("sweep.step", "must be positive");
    Rational threshold(39, 20);
    if (section.contains("ratio_threshold"))
        threshold = detail::json_rational(section.at("ratio_threshold"), "sweep.ratio_threshold");
    auto k = detail::require_int(cfg.domain_params, "k");
    if (k < 2 || k > 16) throw InvalidConfig("domain_params.k", "sweeps need k in [2,16]");

    Sink sink(g.out, "sweep-" + config_hash(cfg) + ".jsonl");
    JsonLinesWriter writer(sink.stream());
    auto goals = sweep_goal_list(static_cast<int>(k), static_cast<std::uint32_t>(step));
    auto sweep = sweep_goals(static_cast<int>(k), a, b, goals, threshold, [&](const GoalSweepRow& r) {
        writer.write(Json{{"type", "goal"},
                          {"goal", r.goal},
                          {"fraction", to_string(r.fraction)},
                          {"discovery_a", r.discovery_a},
                          {"discovery_b", r.discovery_b},
                          {"first_cost_a", r.first_cost_a},
                          {"first_cost_b", r.first_cost_b}});
    });
    auto frac = [](const std::optional<Rational>& f) { return f ? Json(to_string(*f)) : Json(nullptr); };
    writer.write(Json{{"type", "crossover"},
                      {"k", k},
                      {"evaluator_a", describe(a)},
                      {"evaluator_b", describe(b)},
                      {"ratio_threshold", to_string(threshold)},
                      {"ratio_break", frac(sweep.crossover.ratio_break)},
                      {"lead_change", frac(sweep.crossover.lead_change)}});
    return kExitOk;
}

int cmd_score(const GlobalOptions& g, const std::vector<std::string>& files, const std::string& best_path) {
    std::map<std::string, std::map<std::string, std::optional<Cost>>> by_variant;
    std::set<std::string> problems;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw InvalidConfig("files", "cannot open '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = Json::parse(line, nullptr, false);
            if (j.is_discarded() || j.value("type", "") != "metrics") continue;
            auto variant = j.at("evaluator").get<std::string>();
            auto problem = j.at("instance").get<std::string>();
            std::optional<Cost> found;
            if (!j.at("best_cost").is_null()) found = j.at("best_cost").get<Cost>();
            auto& slot = by_variant[variant][problem];
            if (found && (!slot || *found < *slot)) slot = found;
            problems.insert(problem);
        }
    }
    std::map<std::string, std::vector<ProblemResult>> variants;
    for (const auto& [variant, results] : by_variant)
        for (const auto& p : problems) {
            auto it = results.find(p);
            variants[variant].push_back({p, it == results.end() ? std::nullopt : it->second});
        }
    std::map<std::string, Cost> best;
    if (!best_path.empty()) {
        auto j = load_json(best_path);
        for (const auto& [k, v] : j.items()) best[k] = v.get<Cost>();
    } else {
        best = best_over_variants(variants);
    }
    Json out = Json::object();
    for (const auto& [variant, table] : ipc_score_variants(variants, best)) {
        Json rows = Json::array();
        for (const auto& r : table.rows)
            rows.push_back(Json{{"problem", r.problem},
                                {"best_known", r.best_known},
                                {"found", r.found ? Json(*r.found) : Json(nullptr)},
                                {"ratio", to_string(r.ratio)},
                                {"new_best", r.new_best}});
        out[variant] = Json{{"rows", rows},
                            {"aggregate", to_string(table.aggregate)},
                            {"aggregate_percent", to_double(table.aggregate)},
                            {"new_bests", table.new_bests}};
    }
    print_json(g, "score.json", out);
    return kExitOk;
}

int cmd_oracle(const GlobalOptions& g, std::uint64_t cap) {
    auto cfg = load_config(g, g.config);
    return visit_domain(cfg, [&](const auto& problem) {
        auto r = oracle_solve(problem, cap_or_default(cap));
        Json plan = Json::array();
        for (const auto& a : r.plan) plan.push_back(problem.action_label(a));
        Json j{{"instance", problem.key()}, {"solvable", r.solvable}, {"reachable_states", r.reachable_states}};
        if (r.solvable) {
            j["optimal_cost"] = r.optimal_cost;
            j["optimal_size_among_cheapest"] = r.optimal_size_among_cheapest;
            j["smallest_size"] = r.smallest_size;
            j["plan"] = plan;
        }
        print_json(g, "oracle.json", j);
        return kExitOk;
    });
}

int cmd_count_states(const GlobalOptions& g, std::uint64_t cap) {
    auto cfg = load_config(g, g.config);
    return visit_domain(cfg, [&](const auto& problem) {
        auto n = count_reachable(problem, cap_or_default(cap));
        print_json(g, "count.json", Json{{"instance", problem.key()}, {"reachable_states", n}});
        return kExitOk;
    });
}

int cmd_footprint(const GlobalOptions& g, std::uint64_t cap, bool list) {
    auto cfg = load_config(g, g.config);
    return visit_domain(cfg, [&](const auto& problem) {
        auto f = compute_footprint(problem, cap_or_default(cap));
        Json j{{"instance", problem.key()},
               {"f_star", f.f_star},
               {"reachable_states", f.reachable_states},
               {"strict_size", f.strict_set.size()},
               {"boundary_size", f.boundary_set.size()}};
        if (list) {
            Json strict = Json::array(), boundary = Json::array();
            for (const auto& s : f.strict_set) strict.push_back(problem.state_label(s));
            for (const auto& s : f.boundary_set) boundary.push_back(problem.state_label(s));
            j["strict_set"] = strict;
            j["boundary_set"] = boundary;
        }
        print_json(g, "footprint.json", j);
        return kExitOk;
    });
}

struct LabelledRun {
    std::string instance;
    Termination termination = Termination::budget;
    std::vector<std::string> expanded;
    std::vector<std::string> strict;
};

LabelledRun labelled_run(const ExperimentConfig& cfg, bool with_footprint, std::uint64_t cap) {
    return visit_domain(cfg, [&](const auto& problem) {
        LabelledRun out;
        out.instance = problem.key();
        SearchOptions options;
        options.reopen = cfg.reopen;
        options.record_expansions = true;
        auto r = run_search(problem, cfg.evaluator, cfg.budget, options);
        out.termination = r.metrics.termination;
        for (const auto& s : r.expanded_states) out.expanded.push_back(problem.state_label(s));
        if (with_footprint)
            for (const auto& s : compute_footprint(problem, cap).strict_set) out.strict.push_back(problem.state_label(s));
        return out;
    });
}

int cmd_compare(const GlobalOptions& g, const std::string& other, bool strict_only, std::uint64_t cap) {
    auto cfg_a = load_config(g, g.config);
    auto cfg_b = load_config(g, other);
    auto a = labelled_run(cfg_a, strict_only, cap_or_default(cap));
    auto b = labelled_run(cfg_b, false, cap_or_default(cap));
    if (a.instance != b.instance)
        throw InvalidConfig("compare", "runs are on different instances: " + a.instance + " vs " + b.instance);
    for (const auto* r : {&a, &b})
        if (r->termination != Termination::proved) {
            std::cerr << "compare: a run did not finish its optimality proof (" << to_string(r->termination) << ")\n";
            return kExitBudget;
        }
    auto c = compare_state_sets<std::string>(a.expanded, b.expanded, strict_only ? &a.strict : nullptr);
    print_json(g, "compare.json",
               Json{{"instance", a.instance},
                    {"restricted_to_strict_footprint", strict_only},
                    {"equal_states", c.equal_states},
                    {"only_in_a", c.only_in_a},
                    {"only_in_b", c.only_in_b}});
    return kExitOk;
}

int cmd_summarize(const GlobalOptions& g, const std::vector<std::string>& files) {
    auto rows = collect_summary_rows(files, std::cerr);
    Sink sink(g.out, "summary.csv");
    write_summary_csv(rows, sink.stream());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ecost: cost-based, size-based, and hybrid best-first search experiments"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--config", g.config, "Experiment config (JSON)");
    app.add_option("--out", g.out, "Output directory (default: stdout)");
    app.add_option("--seed", g.seed, "Override the config seed");
    app.add_option("--max-expansions", g.max_expansions, "Override the expansion budget");
    app.add_option("--max-seconds", g.max_seconds, "Override the wall-clock budget");
    app.add_flag("--prove", g.prove, "Continue until optimality is proven");
    app.add_flag("--timing", g.timing, "Include wall-clock times in run records");

    std::uint64_t cap = 0;
    bool list = false;
    bool strict_only = false;
    std::string other, best_path;
    std::vector<std::string> files;

    auto* run = app.add_subcommand("run", "Run one search, streaming incumbents as JSON lines");
    auto* sweep = app.add_subcommand("sweep", "Sweep counter goals for two evaluators and locate crossovers");
    auto* score = app.add_subcommand("score", "IPC quality scores from run files");
    score->add_option("files", files, "Run files (JSON lines)")->required();
    score->add_option("--best", best_path, "Reference costs (JSON object instance -> cost)");
    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimal solution of the configured instance");
    auto* footprint = app.add_subcommand("footprint", "Cost-optimal footprint of the configured instance");
    footprint->add_flag("--list", list, "Include state labels");
    auto* compare = app.add_subcommand("compare", "Compare expanded state sets of two proof-completing runs");
    compare->add_option("other", other, "Second config (JSON)")->required();
    compare->add_flag("--strict-footprint", strict_only, "Restrict the comparison to the strict footprint");
    auto* count = app.add_subcommand("count-states", "Count reachable states");
    auto* summarize = app.add_subcommand("summarize", "CSV summary of run files");
    summarize->add_option("files", files, "Run files (JSON lines)");
    for (auto* sub : {oracle, footprint, compare, count})
        sub->add_option("--cap", cap, "State enumeration cap (default 2000000)");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        if (*run) return cmd_run(g);
        if (*sweep) return cmd_sweep(g);
        if (*score) return cmd_score(g, files, best_path);
        if (*oracle) return cmd_oracle(g, cap);
        if (*footprint) return cmd_footprint(g, cap, list);
        if (*compare) return cmd_compare(g, other, strict_only, cap);
        if (*count) return cmd_count_states(g, cap);
        if (*summarize) return cmd_summarize(g, files);
    } catch (const InvalidConfig& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const InadmissibleHeuristic& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
