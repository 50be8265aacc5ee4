#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

/// A small explicitly listed graph; handy for hand-built test instances.
class ExplicitGraph {
  public:
    using State = std::uint32_t;
    using Action = std::uint32_t;  // index into the edge list

    struct EdgeSpec {
        State from;
        State to;
        Cost cost;
        std::string name;
    };

    ExplicitGraph(std::uint32_t n_states, State initial, std::set<State> goals, std::string name = "graph")
        : out_(n_states), heuristics_(n_states), initial_(initial), goals_(std::move(goals)), name_(std::move(name)) {
        if (initial >= n_states) throw InvalidModel("explicit graph: initial state out of range");
        for (State g : goals_)
            if (g >= n_states) throw InvalidModel("explicit graph: goal out of range");
    }

    /// Edges leave each state in insertion order.
    ExplicitGraph& add_edge(State from, State to, Cost cost, std::string name = {}) {
        if (from >= out_.size() || to >= out_.size()) throw InvalidModel("explicit graph: edge endpoint out of range");
        if (cost < 1) throw InvalidModel("explicit graph: edge costs must be >= 1");
        if (name.empty()) name = std::to_string(from) + "->" + std::to_string(to);
        out_[from].push_back(static_cast<Action>(edges_.size()));
        edges_.push_back({from, to, cost, std::move(name)});
        return *this;
    }

    ExplicitGraph& set_heuristic(State s, HeuristicValues h) {
        heuristics_.at(s) = h;
        return *this;
    }

    std::uint32_t state_count() const { return static_cast<std::uint32_t>(out_.size()); }
    const std::vector<EdgeSpec>& edges() const { return edges_; }

    State initial_state() const { return initial_; }
    bool is_goal(State s) const { return goals_.contains(s); }

    void successors(State s, std::vector<Edge<State, Action>>& out) const {
        for (Action id : out_[s]) out.push_back({edges_[id].to, id, edges_[id].cost});
    }

    HeuristicValues heuristics(State s) const { return heuristics_[s]; }

    std::vector<ActionCost> cost_table() const {
        std::vector<ActionCost> t;
        for (const auto& e : edges_) t.push_back({e.name, e.cost});
        if (t.empty()) t.push_back({"none", 1});
        return t;
    }

    std::string state_label(State s) const { return std::to_string(s); }
    std::string action_label(Action a) const { return edges_.at(a).name; }
    std::string key() const { return name_; }

  private:
    std::vector<std::vector<Action>> out_;
    std::vector<EdgeSpec> edges_;
    std::vector<HeuristicValues> heuristics_;
    State initial_;
    std::set<State> goals_;
    std::string name_;
};

}  // namespace ecost
