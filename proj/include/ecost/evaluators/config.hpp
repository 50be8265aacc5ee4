#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecost/core/rational.hpp"

namespace ecost {

enum class EvalKind { cost, size, size_cost_sensitive, hybrid, negated_cost };

enum class TieBreak {
    lifo,            // f, then h, then most recently inserted first
    cost_secondary,  // f, then the cost-valued estimate g_c + h_c, then LIFO
    size_secondary,  // f, then the size-valued estimate g_s + h_s_hat, then LIFO
    fifo             // f, then oldest first
};

enum class ReopenPolicy { reopen, ignore };

/// Which f orders the open list(s), and how.
struct EvaluatorConfig {
    EvalKind kind = EvalKind::cost;
    Rational weight{1};
    bool delayed = false;
    TieBreak tie_break = TieBreak::lifo;
    /// Only meaningful when one of the lists uses the hybrid evaluator.
    std::optional<Rational> hybrid_mix;
    /// Present iff dual open lists are enabled; list 1 is ordered by this kind.
    std::optional<EvalKind> second_kind;

    bool dual_lists() const { return second_kind.has_value(); }
    Rational mix() const { return hybrid_mix.value_or(Rational(1, 2)); }

    friend bool operator==(const EvaluatorConfig&, const EvaluatorConfig&) = default;
};

class InvalidConfig : public std::invalid_argument {
  public:
    InvalidConfig(std::string key, const std::string& message)
        : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

inline std::string_view to_string(EvalKind kind) {
    switch (kind) {
        case EvalKind::cost: return "cost";
        case EvalKind::size: return "size";
        case EvalKind::size_cost_sensitive: return "size-cs";
        case EvalKind::hybrid: return "hybrid";
        case EvalKind::negated_cost: return "neg-cost";
    }
    return "?";
}

inline std::string_view to_string(TieBreak tb) {
    switch (tb) {
        case TieBreak::lifo: return "default";
        case TieBreak::cost_secondary: return "cost";
        case TieBreak::size_secondary: return "size";
        case TieBreak::fifo: return "fifo";
    }
    return "?";
}

inline std::string_view to_string(ReopenPolicy p) {
    return p == ReopenPolicy::reopen ? "reopen" : "ignore";
}

inline EvalKind parse_eval_kind(std::string_view s) {
    if (s == "cost") return EvalKind::cost;
    if (s == "size") return EvalKind::size;
    if (s == "size-cs") return EvalKind::size_cost_sensitive;
    if (s == "hybrid") return EvalKind::hybrid;
    if (s == "neg-cost") return EvalKind::negated_cost;
    throw InvalidConfig("evaluator", "unknown evaluator '" + std::string(s) +
                                         "' (expected cost|size|size-cs|hybrid|neg-cost)");
}

inline TieBreak parse_tie_break(std::string_view s) {
    if (s == "default" || s == "lifo") return TieBreak::lifo;
    if (s == "cost") return TieBreak::cost_secondary;
    if (s == "size") return TieBreak::size_secondary;
    if (s == "fifo") return TieBreak::fifo;
    throw InvalidConfig("tiebreak", "unknown tie-break '" + std::string(s) +
                                        "' (expected default|cost|size|fifo)");
}

inline ReopenPolicy parse_reopen_policy(std::string_view s) {
    if (s == "reopen") return ReopenPolicy::reopen;
    if (s == "ignore") return ReopenPolicy::ignore;
    throw InvalidConfig("reopen", "unknown reopen policy '" + std::string(s) + "'");
}

inline void validate(const EvaluatorConfig& cfg) {
    if (cfg.weight < Rational(1)) throw InvalidConfig("weight", "must be >= 1, got " + to_string(cfg.weight));
    if (cfg.hybrid_mix) {
        bool uses_hybrid = cfg.kind == EvalKind::hybrid || cfg.second_kind == EvalKind::hybrid;
        if (!uses_hybrid) throw InvalidConfig("hybrid_mix", "only valid with the hybrid evaluator");
        if (*cfg.hybrid_mix < Rational(0) || *cfg.hybrid_mix > Rational(1))
            throw InvalidConfig("hybrid_mix", "must lie in [0,1], got " + to_string(*cfg.hybrid_mix));
    }
}

/// Short human-readable label, e.g. "size-cs w=2 delayed dual=cost tb=fifo".
inline std::string describe(const EvaluatorConfig& cfg) {
    std::string s(to_string(cfg.kind));
    if (cfg.second_kind) s += "+" + std::string(to_string(*cfg.second_kind));
    if (cfg.weight != Rational(1)) s += " w=" + to_string(cfg.weight);
    if (cfg.delayed) s += " delayed";
    if (cfg.tie_break != TieBreak::lifo) s += " tb=" + std::string(to_string(cfg.tie_break));
    if (cfg.hybrid_mix) s += " mix=" + to_string(*cfg.hybrid_mix);
    return s;
}

}  // namespace ecost
