#pragma once

#include <cstddef>
#include <stdexcept>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"
#include "ecost/evaluators/config.hpp"

namespace ecost {

/// Accumulated measures of a path.
struct PathMeasures {
    Cost g_cost = 0;
    Size g_size = 0;
};

/// An f-value together with the heuristic term that produced it (used for tie-breaking).
struct Evaluation {
    Rational f;
    Rational h_term;
};

/// Instance-level parameters shared by all evaluators of one run.
struct EvalParams {
    Rational weight{1};
    Cost c_max = 1;
    Rational hybrid_mix{1, 2};
};

inline EvalParams make_params(const EvaluatorConfig& cfg, Cost c_max) {
    return EvalParams{cfg.weight, c_max, cfg.mix()};
}

inline Evaluation eval_cost(PathMeasures g, const HeuristicValues& h, const Rational& weight) {
    Rational ht = weight * h.h_c;
    return {Rational(g.g_cost) + ht, ht};
}

inline Evaluation eval_size(PathMeasures g, const HeuristicValues& h, const Rational& weight) {
    Rational ht = weight * h.h_s;
    return {Rational(g.g_size) + ht, ht};
}

inline Evaluation eval_size_cost_sensitive(PathMeasures g, const HeuristicValues& h, const Rational& weight) {
    Rational ht = weight * h.h_s_hat;
    return {Rational(g.g_size) + ht, ht};
}

/// mix * (g_c + w*h_c) / c_max + (1 - mix) * (g_s + w*h_s_hat)
inline Evaluation eval_hybrid(PathMeasures g, const HeuristicValues& h, const EvalParams& p) {
    if (p.c_max <= 0) throw std::invalid_argument("hybrid evaluator needs a positive maximum edge cost");
    const Rational& mix = p.hybrid_mix;
    Rational cost_part = (Rational(g.g_cost) + p.weight * h.h_c) / p.c_max;
    Rational size_part = Rational(g.g_size) + p.weight * h.h_s_hat;
    Rational ht = mix * (p.weight * h.h_c) / p.c_max + (Rational(1) - mix) * (p.weight * h.h_s_hat);
    return {mix * cost_part + (Rational(1) - mix) * size_part, ht};
}

inline Evaluation eval_negated_cost(PathMeasures g, const HeuristicValues& h, const Rational& weight) {
    Rational ht = weight * h.h_c;
    return {-(Rational(g.g_cost) + ht), ht};
}

inline Evaluation evaluate(EvalKind kind, PathMeasures g, const HeuristicValues& h, const EvalParams& p) {
    switch (kind) {
        case EvalKind::cost: return eval_cost(g, h, p.weight);
        case EvalKind::size: return eval_size(g, h, p.weight);
        case EvalKind::size_cost_sensitive: return eval_size_cost_sensitive(g, h, p.weight);
        case EvalKind::hybrid: return eval_hybrid(g, h, p);
        case EvalKind::negated_cost: return eval_negated_cost(g, h, p.weight);
    }
    throw std::logic_error("unhandled evaluator kind");
}

/// Delayed evaluation: the child's own g with the heuristic of its parent's state.
/// The root has no parent and passes its own heuristic values.
inline Evaluation eval_delayed(EvalKind base, PathMeasures g, const HeuristicValues& parent_h,
                               const EvalParams& p) {
    return evaluate(base, g, parent_h, p);
}

/// Which open list supplies the next expansion when two lists alternate.
inline std::size_t dual_open_select(std::size_t step_counter) { return step_counter % 2; }

}  // namespace ecost
