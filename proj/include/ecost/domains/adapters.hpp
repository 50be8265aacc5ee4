#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

enum class HeuristicChoice {
    model,       // the domain's own heuristic family
    zero,        // blind search: all estimates 0
    admissible,  // h_c replaced by the domain's admissible h_c
};

inline std::string_view to_string(HeuristicChoice c) {
    switch (c) {
        case HeuristicChoice::model: return "model";
        case HeuristicChoice::zero: return "zero";
        case HeuristicChoice::admissible: return "admissible";
    }
    return "?";
}

/// Wraps a problem and swaps the heuristic family seen by the search.
template <SearchProblem P>
class WithHeuristic {
  public:
    using State = typename P::State;
    using Action = typename P::Action;

    WithHeuristic(P inner, HeuristicChoice choice) : inner_(std::move(inner)), choice_(choice) {}

    const P& inner() const { return inner_; }
    HeuristicChoice choice() const { return choice_; }

    State initial_state() const { return inner_.initial_state(); }
    bool is_goal(const State& s) const { return inner_.is_goal(s); }
    void successors(const State& s, std::vector<Edge<State, Action>>& out) const { inner_.successors(s, out); }

    HeuristicValues heuristics(const State& s) const {
        switch (choice_) {
            case HeuristicChoice::model: return inner_.heuristics(s);
            case HeuristicChoice::zero: return {};
            case HeuristicChoice::admissible: {
                auto h = inner_.heuristics(s);
                h.h_c = h.h_c_admissible;
                return h;
            }
        }
        return {};
    }

    std::vector<ActionCost> cost_table() const { return inner_.cost_table(); }
    std::string state_label(const State& s) const { return inner_.state_label(s); }
    std::string action_label(const Action& a) const { return inner_.action_label(a); }
    std::string key() const { return inner_.key(); }

  private:
    P inner_;
    HeuristicChoice choice_;
};

/// Multiplies every edge cost and cost-valued heuristic by a positive factor.
template <SearchProblem P>
class ScaledCosts {
  public:
    using State = typename P::State;
    using Action = typename P::Action;

    ScaledCosts(const P& inner, Cost factor) : inner_(inner), factor_(factor) {
        if (factor < 1) throw InvalidModel("cost scale factor must be >= 1");
    }

    State initial_state() const { return inner_.initial_state(); }
    bool is_goal(const State& s) const { return inner_.is_goal(s); }
    void successors(const State& s, std::vector<Edge<State, Action>>& out) const {
        auto first = out.size();
        inner_.successors(s, out);
        for (auto i = first; i < out.size(); ++i) out[i].cost *= factor_;
    }
    HeuristicValues heuristics(const State& s) const {
        auto h = inner_.heuristics(s);
        h.h_c *= factor_;
        h.h_c_admissible *= factor_;
        return h;
    }
    std::vector<ActionCost> cost_table() const {
        auto t = inner_.cost_table();
        for (auto& a : t) a.cost *= factor_;
        return t;
    }
    std::string state_label(const State& s) const { return inner_.state_label(s); }
    std::string action_label(const Action& a) const { return inner_.action_label(a); }
    std::string key() const { return inner_.key() + "*" + std::to_string(factor_); }

  private:
    const P& inner_;
    Cost factor_;
};

}  // namespace ecost
