#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"

namespace ecost {

/// A node of the uniform branching tree: its depth and its branch digits packed in base x+y.
struct TreeState {
    std::uint16_t depth = 0;
    std::uint64_t code = 0;

    friend auto operator<=>(const TreeState&, const TreeState&) = default;
};

struct TreeAction {
    bool high = false;
    std::uint16_t branch = 0;  // 0-based within its cost class

    friend bool operator==(const TreeAction&, const TreeAction&) = default;
};

}  // namespace ecost

template <>
struct std::hash<ecost::TreeState> {
    std::size_t operator()(const ecost::TreeState& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.code * 0x9E3779B97F4A7C15ULL ^ s.depth);
    }
};

namespace ecost {

struct PlantedSolutionSpec {
    int count = 1;
    Rational mix_ratio{1, 2};  // fraction of high-cost actions in each planted solution
    std::uint64_t seed = 1;
    int depth = 1;      // length of every planted solution
    int max_depth = 0;  // nodes at this depth have no children; 0 means the deepest encodable level
};

struct TreeInstance {
    int x = 2;  // high-cost branches
    int y = 2;  // low-cost branches
    Cost c_high = 2;
    Cost c_low = 1;
    PlantedSolutionSpec solutions;
};

/// Depth of a solution of normalized cost C mixing high and low actions equally:
/// d = 2C / (1 + eps), rounded to the nearest integer with ties to even.
inline int planted_depth(const Rational& normalized_cost, const Rational& epsilon) {
    return static_cast<int>(round_half_even(Rational(2) * normalized_cost / (Rational(1) + epsilon)));
}

/// Uniform branching tree with x high-cost and y low-cost children per node and
/// pseudorandomly planted goal leaves.
class TreeDomain {
  public:
    using State = TreeState;
    using Action = TreeAction;

    explicit TreeDomain(TreeInstance inst) : inst_(std::move(inst)) {
        auto& sol = inst_.solutions;
        if (inst_.x < 2 || inst_.y < 2) throw InvalidModel("tree: x and y must both exceed 1");
        if (inst_.c_low < 1 || inst_.c_high <= inst_.c_low)
            throw InvalidModel("tree: costs must satisfy 1 <= c_low < c_high");
        if (sol.count < 0 || sol.depth < 0) throw InvalidModel("tree: negative solution count or depth");
        if (sol.mix_ratio < Rational(0) || sol.mix_ratio > Rational(1))
            throw InvalidModel("tree: mix_ratio must lie in [0,1]");
        if (sol.max_depth == 0) sol.max_depth = encodable_depth();
        if (sol.max_depth < sol.depth) throw InvalidModel("tree: max_depth below planted depth");
        if (sol.max_depth > encodable_depth())
            throw InvalidModel("tree: (x+y)^max_depth does not fit the 64-bit state encoding");
        plant();
    }

    const TreeInstance& instance() const { return inst_; }
    int branching() const { return inst_.x + inst_.y; }
    int high_actions_per_solution() const {
        return static_cast<int>(round_half_even(inst_.solutions.mix_ratio * inst_.solutions.depth));
    }
    const std::vector<std::vector<Action>>& planted_solutions() const { return planted_; }

    /// Largest m with (x+y)^m < 2^63.
    int encodable_depth() const {
        const auto b = static_cast<std::uint64_t>(branching());
        std::uint64_t span = 1;
        int m = 0;
        while (span <= (std::uint64_t{1} << 63) / b - 1) {
            span *= b;
            ++m;
        }
        return m;
    }

    State initial_state() const { return {}; }
    bool is_goal(const State& s) const { return goals_.contains(s); }

    /// h1..hx, then l1..ly.
    void successors(const State& s, std::vector<Edge<State, Action>>& out) const {
        if (s.depth >= inst_.solutions.max_depth) return;
        for (int i = 0; i < inst_.x; ++i)
            out.push_back({child(s, Action{true, static_cast<std::uint16_t>(i)}),
                           Action{true, static_cast<std::uint16_t>(i)}, inst_.c_high});
        for (int i = 0; i < inst_.y; ++i)
            out.push_back({child(s, Action{false, static_cast<std::uint16_t>(i)}),
                           Action{false, static_cast<std::uint16_t>(i)}, inst_.c_low});
    }

    HeuristicValues heuristics(const State&) const { return {}; }

    std::vector<ActionCost> cost_table() const { return {{"high", inst_.c_high}, {"low", inst_.c_low}}; }

    std::string state_label(const State& s) const {
        std::string out;
        std::uint64_t code = s.code;
        std::vector<std::string> labels;
        for (int i = 0; i < s.depth; ++i) {
            labels.push_back(action_label(decode_digit(code % branching())));
            code /= branching();
        }
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) out += (out.empty() ? "" : ".") + *it;
        return out.empty() ? "root" : out;
    }
    std::string action_label(const Action& a) const { return (a.high ? "h" : "l") + std::to_string(a.branch + 1); }
    std::string key() const {
        const auto& s = inst_.solutions;
        return "tree(x=" + std::to_string(inst_.x) + ",y=" + std::to_string(inst_.y) +
               ",c_high=" + std::to_string(inst_.c_high) + ",c_low=" + std::to_string(inst_.c_low) +
               ",count=" + std::to_string(s.count) + ",mix=" + to_string(s.mix_ratio) + ",seed=" +
               std::to_string(s.seed) + ",depth=" + std::to_string(s.depth) + ",max_depth=" +
               std::to_string(s.max_depth) + ")";
    }

    State child(const State& s, const Action& a) const {
        std::uint64_t digit = a.high ? a.branch : static_cast<std::uint64_t>(inst_.x) + a.branch;
        return {static_cast<std::uint16_t>(s.depth + 1), s.code * static_cast<std::uint64_t>(branching()) + digit};
    }

    State state_of(const std::vector<Action>& path) const {
        State s;
        for (const auto& a : path) s = child(s, a);
        return s;
    }

  private:
    Action decode_digit(std::uint64_t digit) const {
        if (digit < static_cast<std::uint64_t>(inst_.x)) return {true, static_cast<std::uint16_t>(digit)};
        return {false, static_cast<std::uint16_t>(digit - inst_.x)};
    }

    // Uses raw mt19937_64 output so planted sets are identical across standard libraries.
    void plant() {
        const auto& spec = inst_.solutions;
        std::mt19937_64 rng(spec.seed);
        auto draw = [&](std::uint64_t n) { return rng() % n; };
        const int n_high = high_actions_per_solution();
        std::set<std::uint64_t> seen;
        for (int k = 0; k < spec.count; ++k) {
            std::vector<bool> is_high(spec.depth, false);
            for (int i = 0; i < n_high; ++i) is_high[i] = true;
            for (int i = spec.depth - 1; i > 0; --i) {
                auto j = static_cast<int>(draw(static_cast<std::uint64_t>(i) + 1));
                bool tmp = is_high[i];
                is_high[i] = is_high[j];
                is_high[j] = tmp;
            }
            std::vector<Action> path;
            for (int i = 0; i < spec.depth; ++i) {
                auto n = static_cast<std::uint64_t>(is_high[i] ? inst_.x : inst_.y);
                path.push_back(Action{is_high[i], static_cast<std::uint16_t>(draw(n))});
            }
            State s = state_of(path);
            if (seen.insert(s.code).second) {
                goals_.insert(s);
                planted_.push_back(std::move(path));
            }
        }
    }

    TreeInstance inst_;
    std::unordered_set<State> goals_;
    std::vector<std::vector<Action>> planted_;
};

/// Predicted exploration sizes on the uniform branching tree.
struct TreePredictions {
    BigInt cost_based_bound;  // (x + y^(1/eps))^C
    BigInt size_based_bound;  // (x + y)^d with d rounded
    Rational depth;           // 2C / (1 + eps), unrounded
    int depth_rounded = 0;
    bool cost_bound_exact = true;  // false when 1/eps or C is not integral (exponents floored)
    double eps_threshold = 0.0;    // (1 - log_b 2) / (1 + log_b 2), b = x + y
    std::optional<Rational> eps_threshold_exact;  // available when b is a power of two
};

/// (1 - log_b 2) / (1 + log_b 2); exact for b = 2^m as (m - 1) / (m + 1).
inline std::pair<double, std::optional<Rational>> eps_threshold(std::uint64_t b) {
    if (b < 2) throw std::invalid_argument("eps_threshold: branching factor must be >= 2");
    const double l = std::log(2.0) / std::log(static_cast<double>(b));
    std::optional<Rational> exact;
    if (std::has_single_bit(b)) {
        auto m = static_cast<std::int64_t>(std::countr_zero(b));
        exact = Rational(m - 1, m + 1);
    }
    return {(1.0 - l) / (1.0 + l), exact};
}

inline TreePredictions tree_predictions(int x, int y, const Rational& epsilon, const Rational& normalized_cost) {
    if (x < 1 || y < 1) throw std::invalid_argument("tree_predictions: x and y must be positive");
    if (epsilon <= Rational(0) || epsilon > Rational(1))
        throw std::invalid_argument("tree_predictions: epsilon must lie in (0,1]");
    TreePredictions p;
    const Rational inv_eps = Rational(1) / epsilon;
    p.cost_bound_exact = inv_eps.denominator() == 1 && normalized_cost.denominator() == 1;
    BigInt inner = BigInt(x) + big_pow(BigInt(y), static_cast<std::uint64_t>(floor(inv_eps)));
    p.cost_based_bound = big_pow(inner, static_cast<std::uint64_t>(floor(normalized_cost)));
    p.depth = Rational(2) * normalized_cost / (Rational(1) + epsilon);
    p.depth_rounded = static_cast<int>(round_half_even(p.depth));
    p.size_based_bound = big_pow(BigInt(x + y), static_cast<std::uint64_t>(p.depth_rounded));
    auto [approx, exact] = eps_threshold(static_cast<std::uint64_t>(x + y));
    p.eps_threshold = approx;
    p.eps_threshold_exact = exact;
    return p;
}

}  // namespace ecost
