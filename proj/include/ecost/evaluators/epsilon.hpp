#pragma once

#include <span>
#include <string>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"

namespace ecost {

struct NormalizedCost {
    std::string name;
    Rational cost;  // c(a) / c_max
};

struct EpsilonReport {
    Rational epsilon;  // min_a c(a) / max_a c(a), in (0, 1]
    Cost c_min = 0;
    Cost c_max = 0;
    std::vector<NormalizedCost> normalized;
};

inline EpsilonReport epsilon_of(std::span<const ActionCost> table) {
    validate_cost_table(table);
    EpsilonReport r;
    r.c_min = table.front().cost;
    r.c_max = table.front().cost;
    for (const auto& a : table) {
        r.c_min = std::min(r.c_min, a.cost);
        r.c_max = std::max(r.c_max, a.cost);
    }
    r.epsilon = Rational(r.c_min, r.c_max);
    for (const auto& a : table) r.normalized.push_back({a.name, Rational(a.cost, r.c_max)});
    return r;
}

template <SearchProblem P>
EpsilonReport epsilon_of(const P& problem) {
    auto table = problem.cost_table();
    return epsilon_of(std::span<const ActionCost>(table));
}

}  // namespace ecost
