#pragma once

#include <algorithm>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecost/search/metrics.hpp"

namespace ecost {

template <typename State>
struct ExpansionSetComparison {
    bool equal_states = true;
    std::vector<State> only_in_a;
    std::vector<State> only_in_b;
};

/// Compares expanded state sets (not sequences), optionally restricted to `within`.
template <typename State>
ExpansionSetComparison<State> compare_state_sets(std::span<const State> a, std::span<const State> b,
                                                 const std::vector<State>* within = nullptr) {
    std::vector<State> sa(a.begin(), a.end());
    std::vector<State> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    std::sort(sb.begin(), sb.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    if (within) {
        std::vector<State> w(within->begin(), within->end());
        std::sort(w.begin(), w.end());
        auto restrict = [&](std::vector<State>& v) {
            std::vector<State> out;
            std::set_intersection(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(out));
            v = std::move(out);
        };
        restrict(sa);
        restrict(sb);
    }
    ExpansionSetComparison<State> c;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(c.only_in_a));
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::back_inserter(c.only_in_b));
    c.equal_states = c.only_in_a.empty() && c.only_in_b.empty();
    return c;
}

/// Both runs must come from the same instance and must have recorded their expansions.
template <typename State, typename Action>
ExpansionSetComparison<State> expansion_set_compare(const RunResult<State, Action>& a, const RunResult<State, Action>& b,
                                                    const std::vector<State>* within = nullptr) {
    if (a.instance_key != b.instance_key)
        throw std::invalid_argument("expansion_set_compare: runs on different instances ('" + a.instance_key +
                                    "' vs '" + b.instance_key + "')");
    if ((a.metrics.expansions > 0 && a.expanded_states.empty()) || (b.metrics.expansions > 0 && b.expanded_states.empty()))
        throw std::invalid_argument("expansion_set_compare: runs did not record expanded states");
    return compare_state_sets<State>(a.expanded_states, b.expanded_states, within);
}

}  // namespace ecost
