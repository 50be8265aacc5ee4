#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ecost/core/rational.hpp"
#include "ecost/domains/adapters.hpp"
#include "ecost/domains/counter.hpp"
#include "ecost/domains/travel.hpp"
#include "ecost/domains/tree.hpp"
#include "ecost/evaluators/config.hpp"
#include "ecost/search/engine.hpp"

namespace ecost {

using Json = nlohmann::json;

/// One fully validated experiment description.
struct ExperimentConfig {
    std::string domain;  // counter | tree | travel-rendezvous | travel-swap
    Json domain_params = Json::object();
    EvaluatorConfig evaluator;
    ReopenPolicy reopen = ReopenPolicy::reopen;
    SearchBudget budget{std::nullopt, std::nullopt, false};
    std::uint64_t seed = 1;
    Json extra = Json::object();  // subcommand-specific sections (e.g. "sweep")
};

namespace detail {

inline void reject_unknown(const Json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) {
            std::string path = where.empty() ? key : std::string(where) + "." + key;
            throw InvalidConfig(path, "unknown key");
        }
    }
}

inline Rational json_rational(const Json& v, const std::string& key) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
        if (v.is_number_float()) return parse_rational(v.dump());
    } catch (const std::exception& e) {
        throw InvalidConfig(key, e.what());
    }
    throw InvalidConfig(key, "expected a number or a fraction string");
}

inline std::int64_t json_int(const Json& v, const std::string& key) {
    if (!v.is_number_integer()) throw InvalidConfig(key, "expected an integer");
    return v.get<std::int64_t>();
}

inline bool json_bool(const Json& v, const std::string& key) {
    if (!v.is_boolean()) throw InvalidConfig(key, "expected true or false");
    return v.get<bool>();
}

inline std::string json_string(const Json& v, const std::string& key) {
    if (!v.is_string()) throw InvalidConfig(key, "expected a string");
    return v.get<std::string>();
}

inline std::int64_t param_int(const Json& p, const char* key, std::int64_t fallback) {
    return p.contains(key) ? json_int(p.at(key), std::string("domain_params.") + key) : fallback;
}

inline std::int64_t require_int(const Json& p, const char* key) {
    if (!p.contains(key)) throw InvalidConfig(std::string("domain_params.") + key, "required");
    return json_int(p.at(key), std::string("domain_params.") + key);
}

inline void parse_evaluator_fields(const Json& e, EvaluatorConfig& cfg, ReopenPolicy& reopen, const std::string& where) {
    auto key = [&](const char* k) { return where.empty() ? std::string(k) : where + "." + k; };
    std::optional<EvalKind> kind;
    if (e.contains("kind")) kind = parse_eval_kind(json_string(e.at("kind"), key("kind")));
    if (e.contains("dual")) {
        auto text = json_string(e.at("dual"), key("dual"));
        auto plus = text.find('+');
        if (plus == std::string::npos) throw InvalidConfig(key("dual"), "expected '<evalA>+<evalB>'");
        auto first = parse_eval_kind(text.substr(0, plus));
        if (kind && *kind != first) throw InvalidConfig(key("dual"), "first list disagrees with evaluator kind");
        kind = first;
        cfg.second_kind = parse_eval_kind(text.substr(plus + 1));
    }
    if (kind) cfg.kind = *kind;
    if (e.contains("weight")) cfg.weight = json_rational(e.at("weight"), key("weight"));
    if (e.contains("delayed")) cfg.delayed = json_bool(e.at("delayed"), key("delayed"));
    if (e.contains("tiebreak")) cfg.tie_break = parse_tie_break(json_string(e.at("tiebreak"), key("tiebreak")));
    if (e.contains("hybrid_mix")) cfg.hybrid_mix = json_rational(e.at("hybrid_mix"), key("hybrid_mix"));
    if (e.contains("reopen")) reopen = parse_reopen_policy(json_string(e.at("reopen"), key("reopen")));
}

}  // namespace detail

inline EvaluatorConfig parse_evaluator(const Json& v, ReopenPolicy* reopen = nullptr) {
    EvaluatorConfig cfg;
    ReopenPolicy r = ReopenPolicy::reopen;
    if (v.is_string()) {
        auto text = v.get<std::string>();
        if (text.find('+') != std::string::npos)
            detail::parse_evaluator_fields(Json{{"dual", text}}, cfg, r, "evaluator");
        else
            cfg.kind = parse_eval_kind(text);
    } else if (v.is_object()) {
        detail::reject_unknown(v, "evaluator", {"kind", "weight", "delayed", "dual", "tiebreak", "hybrid_mix", "reopen"});
        detail::parse_evaluator_fields(v, cfg, r, "evaluator");
    } else {
        throw InvalidConfig("evaluator", "expected a name or an object");
    }
    validate(cfg);
    if (reopen) *reopen = r;
    return cfg;
}

/// Parses and validates a config document. Sections listed in `extra_sections` are kept verbatim.
inline ExperimentConfig parse_experiment(const Json& doc, std::initializer_list<std::string_view> extra_sections = {}) {
    if (!doc.is_object()) throw InvalidConfig("<root>", "config must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        static const std::set<std::string> known{"domain", "domain_params", "evaluator", "budget", "seed"};
        bool extra = false;
        for (auto s : extra_sections) extra = extra || key == s;
        if (!known.contains(key) && !extra) throw InvalidConfig(key, "unknown key");
    }
    ExperimentConfig cfg;
    if (!doc.contains("domain")) throw InvalidConfig("domain", "required");
    cfg.domain = detail::json_string(doc.at("domain"), "domain");
    static const std::set<std::string> domains{"counter", "tree", "travel-rendezvous", "travel-swap"};
    if (!domains.contains(cfg.domain))
        throw InvalidConfig("domain", "unknown domain '" + cfg.domain +
                                          "' (expected counter|tree|travel-rendezvous|travel-swap)");
    if (doc.contains("domain_params")) {
        if (!doc.at("domain_params").is_object()) throw InvalidConfig("domain_params", "expected an object");
        cfg.domain_params = doc.at("domain_params");
    }
    if (doc.contains("evaluator")) cfg.evaluator = parse_evaluator(doc.at("evaluator"), &cfg.reopen);
    if (doc.contains("seed")) {
        auto s = detail::json_int(doc.at("seed"), "seed");
        if (s < 0) throw InvalidConfig("seed", "must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    if (doc.contains("budget")) {
        const auto& b = doc.at("budget");
        if (!b.is_object()) throw InvalidConfig("budget", "expected an object");
        detail::reject_unknown(b, "budget", {"max_expansions", "max_seconds", "prove"});
        if (b.contains("max_expansions")) {
            auto n = detail::json_int(b.at("max_expansions"), "budget.max_expansions");
            if (n < 0) throw InvalidConfig("budget.max_expansions", "must be non-negative");
            cfg.budget.max_expansions = static_cast<std::uint64_t>(n);
        }
        if (b.contains("max_seconds")) {
            auto s = detail::json_rational(b.at("max_seconds"), "budget.max_seconds");
            if (s <= Rational(0)) throw InvalidConfig("budget.max_seconds", "must be positive");
            cfg.budget.max_time = std::chrono::milliseconds(floor(s * Rational(1000)));
        }
        if (b.contains("prove")) cfg.budget.prove_optimality = detail::json_bool(b.at("prove"), "budget.prove");
    }
    for (auto s : extra_sections)
        if (doc.contains(std::string(s))) cfg.extra[std::string(s)] = doc.at(std::string(s));
    return cfg;
}

/// Canonical JSON form of a validated config; keys are sorted, so equal configs dump equally.
inline Json to_json(const ExperimentConfig& cfg) {
    Json ev{{"kind", std::string(to_string(cfg.evaluator.kind))},
            {"weight", to_string(cfg.evaluator.weight)},
            {"delayed", cfg.evaluator.delayed},
            {"tiebreak", std::string(to_string(cfg.evaluator.tie_break))},
            {"reopen", std::string(to_string(cfg.reopen))}};
    if (cfg.evaluator.second_kind)
        ev["dual"] = std::string(to_string(cfg.evaluator.kind)) + "+" + std::string(to_string(*cfg.evaluator.second_kind));
    if (cfg.evaluator.hybrid_mix) ev["hybrid_mix"] = to_string(*cfg.evaluator.hybrid_mix);
    Json budget{{"prove", cfg.budget.prove_optimality}};
    if (cfg.budget.max_expansions) budget["max_expansions"] = *cfg.budget.max_expansions;
    if (cfg.budget.max_time) budget["max_seconds"] = to_string(Rational(cfg.budget.max_time->count(), 1000));
    Json out{{"domain", cfg.domain}, {"domain_params", cfg.domain_params}, {"evaluator", ev}, {"budget", budget},
             {"seed", cfg.seed}};
    for (const auto& [k, v] : cfg.extra.items()) out[k] = v;
    return out;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string config_hash(const ExperimentConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(cfg).dump())));
    return buf;
}

/// Builds the configured domain instance and hands it to `fn`.
template <typename Fn>
decltype(auto) visit_domain(const ExperimentConfig& cfg, Fn&& fn) {
    using detail::param_int;
    using detail::require_int;
    const Json& p = cfg.domain_params;
    auto heuristic = [&](std::string fallback) {
        return p.contains("heuristic") ? detail::json_string(p.at("heuristic"), "domain_params.heuristic") : fallback;
    };
    auto bad_heuristic = [&](const std::string& got, const char* expected) {
        return InvalidConfig("domain_params.heuristic", "unknown heuristic '" + got + "' (expected " + expected + ")");
    };
    try {
        if (cfg.domain == "counter") {
            detail::reject_unknown(p, "domain_params", {"k", "goal", "heuristic"});
            auto k = require_int(p, "k");
            if (k < 2 || k > 30) throw InvalidConfig("domain_params.k", "must lie in [2,30]");
            auto goal = param_int(p, "goal", (std::int64_t{1} << k) - 2);
            if (goal < 0 || goal >= (std::int64_t{1} << k))
                throw InvalidConfig("domain_params.goal", "must lie in [0, 2^k - 1]");
            auto h = heuristic("zero");
            CounterDomain::HeuristicMode mode;
            if (h == "zero")
                mode = CounterDomain::HeuristicMode::zero;
            else if (h == "exact")
                mode = CounterDomain::HeuristicMode::exact;
            else
                throw bad_heuristic(h, "zero|exact");
            const WithHeuristic problem(CounterDomain(static_cast<int>(k), static_cast<std::uint32_t>(goal), mode),
                                        HeuristicChoice::model);
            return fn(problem);
        }
        if (cfg.domain == "tree") {
            detail::reject_unknown(p, "domain_params", {"x", "y", "c_high", "c_low", "count", "mix_ratio", "seed",
                                                        "depth", "normalized_cost", "max_depth", "heuristic"});
            TreeInstance t;
            t.x = static_cast<int>(param_int(p, "x", 2));
            t.y = static_cast<int>(param_int(p, "y", 2));
            t.c_high = param_int(p, "c_high", 2);
            t.c_low = param_int(p, "c_low", 1);
            auto& s = t.solutions;
            s.count = static_cast<int>(param_int(p, "count", 1));
            if (p.contains("mix_ratio")) s.mix_ratio = detail::json_rational(p.at("mix_ratio"), "domain_params.mix_ratio");
            s.seed = p.contains("seed") ? static_cast<std::uint64_t>(param_int(p, "seed", 0)) : cfg.seed;
            if (p.contains("depth") && p.contains("normalized_cost"))
                throw InvalidConfig("domain_params.depth", "give either depth or normalized_cost, not both");
            if (p.contains("normalized_cost")) {
                if (t.c_high <= 0) throw InvalidConfig("domain_params.c_high", "must be positive");
                auto c = detail::json_rational(p.at("normalized_cost"), "domain_params.normalized_cost");
                s.depth = planted_depth(c, Rational(t.c_low, t.c_high));
            } else {
                s.depth = static_cast<int>(param_int(p, "depth", 4));
            }
            s.max_depth = static_cast<int>(param_int(p, "max_depth", 0));
            auto h = heuristic("zero");
            if (h != "zero") throw bad_heuristic(h, "zero");
            const WithHeuristic problem(TreeDomain(t), HeuristicChoice::zero);
            return fn(problem);
        }
        TravelInstance inst;
        if (cfg.domain == "travel-rendezvous") {
            detail::reject_unknown(p, "domain_params",
                                   {"k", "planes", "adjacent_origins", "diagonal_cost", "exterior_cost", "heuristic"});
            RendezvousOptions o;
            o.planes = static_cast<int>(param_int(p, "planes", o.planes));
            if (p.contains("adjacent_origins"))
                o.adjacent_origins = detail::json_bool(p.at("adjacent_origins"), "domain_params.adjacent_origins");
            o.diagonal_cost = param_int(p, "diagonal_cost", o.diagonal_cost);
            o.exterior_cost = param_int(p, "exterior_cost", o.exterior_cost);
            inst = make_rendezvous(static_cast<int>(param_int(p, "k", 1)), o);
        } else {
            detail::reject_unknown(p, "domain_params", {"n_cities", "passengers", "fly_cost", "heuristic"});
            SwapOptions o;
            o.passengers_per_side = static_cast<int>(param_int(p, "passengers", o.passengers_per_side));
            o.fly_cost = param_int(p, "fly_cost", o.fly_cost);
            inst = make_swap(static_cast<int>(param_int(p, "n_cities", 2)), o);
        }
        auto h = heuristic("model");
        HeuristicChoice choice;
        if (h == "model")
            choice = HeuristicChoice::model;
        else if (h == "zero")
            choice = HeuristicChoice::zero;
        else if (h == "admissible")
            choice = HeuristicChoice::admissible;
        else
            throw bad_heuristic(h, "model|zero|admissible");
        const WithHeuristic problem(TravelDomain(std::move(inst)), choice);
        return fn(problem);
    } catch (const InvalidModel& e) {
        throw InvalidConfig("domain_params", e.what());
    }
}

}  // namespace ecost
