#include <gtest/gtest.h>

#include <functional>

#include "ecost/analysis/bounds.hpp"
#include "ecost/analysis/compare.hpp"
#include "ecost/analysis/error.hpp"
#include "ecost/analysis/footprint.hpp"
#include "ecost/analysis/oracle.hpp"
#include "ecost/domains/adapters.hpp"
#include "ecost/domains/counter.hpp"
#include "ecost/domains/explicit_graph.hpp"
#include "ecost/domains/travel.hpp"
#include "ecost/search/engine.hpp"
#include "support/reference.hpp"

using namespace ecost;

namespace {

constexpr std::uint64_t kCap = 1'000'000;

EvaluatorConfig eval(EvalKind kind, TieBreak tb = TieBreak::lifo) {
    EvaluatorConfig c;
    c.kind = kind;
    c.tie_break = tb;
    return c;
}

SearchOptions recording() {
    SearchOptions o;
    o.record_expansions = true;
    return o;
}

}  // namespace

TEST(Oracle, CounterWrapSolution) {
    auto r = oracle_solve(CounterDomain(4, 14), kCap);
    ASSERT_TRUE(r.solvable);
    EXPECT_EQ(r.optimal_cost, 9);
    EXPECT_EQ(r.optimal_size_among_cheapest, 2);
    EXPECT_EQ(r.smallest_size, 2);
    EXPECT_EQ(r.reachable_states, 16u);
    EXPECT_EQ(r.plan, (std::vector<CounterDomain::Action>{CounterDomain::Action::decrement,
                                                          CounterDomain::Action::decrement}));
}

TEST(Oracle, SwapTwoCities) {
    TravelDomain t(make_swap(2));
    auto r = oracle_solve(t, kCap);
    EXPECT_EQ(r.optimal_cost, 20004);
    EXPECT_EQ(r.optimal_size_among_cheapest, 6);
    EXPECT_EQ(r.reachable_states, 64u);
    EXPECT_EQ(r.optimal_cost, ref::optimal_cost(t));
}

TEST(Oracle, GoalAtStartAndUnreachableGoal) {
    auto r = oracle_solve(CounterDomain(5, 0), kCap);
    EXPECT_TRUE(r.solvable);
    EXPECT_EQ(r.optimal_cost, 0);
    EXPECT_TRUE(r.plan.empty());
    ExplicitGraph g(3, 0, {2});
    g.add_edge(0, 1, 4);
    EXPECT_FALSE(oracle_solve(g, kCap).solvable);
}

TEST(Oracle, CapIsEnforced) {
    EXPECT_THROW(enumerate_states(CounterDomain(10, 5), 100), CapExceeded);
    EXPECT_THROW(count_reachable(CounterDomain(10, 5), 100), CapExceeded);
    EXPECT_EQ(count_reachable(CounterDomain(10, 5), 1024), 1024u);
}

TEST(Oracle, CostToGoMatchesReference) {
    TravelDomain t(make_swap(3));
    auto space = enumerate_states(t, kCap);
    auto h = optimal_cost_to_go(space);
    auto g = optimal_cost_to_reach(space);
    auto ref_g = ref::dijkstra(t);
    for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(g[i], ref_g.at(space.states[i]));
    EXPECT_EQ(h[0], 40004);
}

TEST(Footprint, CounterBlindSearch) {
    auto fp = compute_footprint(CounterDomain(4, 14), kCap);
    EXPECT_EQ(fp.f_star, 9);
    EXPECT_EQ(fp.strict_set, (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 15}));
    EXPECT_EQ(fp.boundary_set, (std::vector<std::uint32_t>{9, 14}));
}

TEST(Footprint, PerfectHeuristicLeavesOnlyOptimalPaths) {
    auto fp = compute_footprint(CounterDomain(4, 14, CounterDomain::HeuristicMode::exact), kCap);
    EXPECT_TRUE(fp.strict_set.empty());
    EXPECT_EQ(fp.boundary_set, (std::vector<std::uint32_t>{0, 14, 15}));
}

TEST(Footprint, GoalAtStart) {
    auto fp = compute_footprint(CounterDomain(4, 0), kCap);
    EXPECT_EQ(fp.f_star, 0);
    EXPECT_TRUE(fp.strict_set.empty());
    EXPECT_EQ(fp.boundary_set, (std::vector<std::uint32_t>{0}));
}

TEST(Footprint, RejectsInconsistentHeuristic) {
    ExplicitGraph g(3, 0, {2});
    g.add_edge(0, 1, 1).add_edge(1, 2, 1);
    g.set_heuristic(1, HeuristicValues{.h_c = 5, .h_c_admissible = 5});
    EXPECT_THROW(compute_footprint(g, kCap), InadmissibleHeuristic);
}

TEST(Footprint, SwapAdmissibleAuditPasses) {
    WithHeuristic t(TravelDomain(make_swap(2)), HeuristicChoice::admissible);
    auto space = enumerate_states(t, kCap);
    EXPECT_TRUE(audit_cost_heuristic(t, space).ok());
    auto fp = compute_footprint(t, kCap);
    EXPECT_EQ(fp.f_star, 20004);
    EXPECT_EQ(fp.strict_set.size(), 4u);
    EXPECT_EQ(fp.boundary_set.size(), 25u);
}

TEST(Compare, TieBreaksAgreeOnTheStrictFootprint) {
    CounterDomain c(6, 40);
    auto fp = compute_footprint(c, kCap);
    auto lifo = run_search(c, eval(EvalKind::cost), SearchBudget{}, recording());
    auto fifo = run_search(c, eval(EvalKind::cost, TieBreak::fifo), SearchBudget{}, recording());
    auto neg = run_search(c, eval(EvalKind::negated_cost), SearchBudget{}, recording());
    EXPECT_TRUE(expansion_set_compare(lifo, fifo, &fp.strict_set).equal_states);
    EXPECT_TRUE(expansion_set_compare(lifo, neg, &fp.strict_set).equal_states);
    // every strict state is expanded
    auto all = compare_state_sets<std::uint32_t>(lifo.expanded_states, fp.strict_set);
    EXPECT_TRUE(all.only_in_b.empty());
}

TEST(Compare, ReportsDifferencesBothWays) {
    std::vector<int> a{1, 2, 3, 3}, b{2, 4};
    auto c = compare_state_sets<int>(a, b);
    EXPECT_FALSE(c.equal_states);
    EXPECT_EQ(c.only_in_a, (std::vector<int>{1, 3}));
    EXPECT_EQ(c.only_in_b, (std::vector<int>{4}));
    std::vector<int> w{2, 3};
    auto r = compare_state_sets<int>(a, b, &w);
    EXPECT_EQ(r.only_in_a, (std::vector<int>{3}));
    EXPECT_TRUE(r.only_in_b.empty());
}

TEST(Compare, DifferentInstancesOrMissingRecordsThrow) {
    auto a = run_search(CounterDomain(6, 40), eval(EvalKind::cost), SearchBudget{}, recording());
    auto b = run_search(CounterDomain(6, 41), eval(EvalKind::cost), SearchBudget{}, recording());
    EXPECT_THROW(expansion_set_compare(a, b), std::invalid_argument);
    auto bare = run_search(CounterDomain(6, 40), eval(EvalKind::cost), SearchBudget{});
    EXPECT_THROW(expansion_set_compare(a, bare), std::invalid_argument);
}

TEST(WorstCaseBound, SmallValues) {
    EXPECT_EQ(worst_case_bound(2, Rational(3), Rational(1), Rational(1)), BigInt(8));
    EXPECT_EQ(worst_case_bound(2, Rational(2), Rational(1), Rational(2)), BigInt(16));
    EXPECT_EQ(worst_case_bound(4, Rational(10), Rational(1, 4), Rational(1)), big_pow(BigInt(4), 40));
    EXPECT_EQ(worst_case_bound(3, Rational(5, 2), Rational(1), Rational(1)), BigInt(9));
}

TEST(WorstCaseBound, RejectsDegenerateGradients) {
    EXPECT_THROW(worst_case_bound(2, Rational(3), Rational(0), Rational(1)), std::invalid_argument);
    EXPECT_THROW(worst_case_bound(2, Rational(3), Rational(2), Rational(1)), std::invalid_argument);
    EXPECT_THROW(worst_case_bound(2, Rational(-1), Rational(1), Rational(1)), std::invalid_argument);
}

TEST(WorstCaseBound, MonotoneInDepthAndGradientRatio) {
    for (std::uint64_t b : {2u, 3u, 5u}) {
        BigInt prev = 0;
        for (int d2 = 0; d2 <= 20; ++d2) {
            auto v = worst_case_bound(b, Rational(d2, 2), Rational(1, 3), Rational(1));
            EXPECT_GE(v, prev);
            prev = v;
        }
        prev = 0;
        for (int m = 1; m <= 12; ++m) {
            auto v = worst_case_bound(b, Rational(4), Rational(1, m), Rational(1));
            EXPECT_GE(v, prev);
            prev = v;
        }
    }
}

TEST(HeuristicError, BlindRootOfCounter) {
    CounterDomain c(4, 14);
    ReferenceSolution x{9, 2};
    auto e = heuristic_error(0, 0, c.heuristics(c.initial_state()), x);
    EXPECT_EQ(e.e_c, 9);
    EXPECT_EQ(e.e_s, 2);
}

TEST(HeuristicError, VanishesAlongOptimalPathWithPerfectHeuristic) {
    CounterDomain c(8, 200, CounterDomain::HeuristicMode::exact);
    auto opt = oracle_solve(c, kCap);
    ReferenceSolution x{opt.optimal_cost, static_cast<Size>(opt.plan.size())};
    std::uint32_t s = c.initial_state();
    Cost g = 0;
    for (const auto& a : opt.plan) {
        EXPECT_EQ(heuristic_error(g, 0, c.heuristics(s), x).e_c, 0);
        for (const auto& e : ref::children(c, s))
            if (e.action == a) {
                g += e.cost;
                s = e.target;
                break;
            }
    }
    EXPECT_TRUE(c.is_goal(s));
}

TEST(HeuristicError, NonNegativeForOptimalReferenceAndAdmissibleEstimate) {
    WithHeuristic t(TravelDomain(make_swap(3)), HeuristicChoice::admissible);
    SearchOptions o;
    o.record_trace = true;
    auto r = run_search(t, eval(EvalKind::size), SearchBudget{}, o);
    ASSERT_EQ(r.metrics.termination, Termination::proved);
    ReferenceSolution x{r.best()->cost, r.best()->size};
    auto g_star = ref::dijkstra(t);
    for (const auto& rec : r.trace) {
        if (rec.g_cost != g_star.at(rec.state)) continue;
        EXPECT_GE(heuristic_error(rec, x, CostHeuristic::admissible).e_c, 0);
    }
}

TEST(CheapSubspace, SwapPassengerShufflingDepth) {
    TravelDomain t(make_swap(2));
    std::function<bool(const TravelAction&)> cheap = [](const TravelAction& a) {
        return a.kind != TravelAction::Kind::fly;
    };
    EXPECT_EQ(cheap_subspace_eccentricity(t, t.initial_state(), cheap, kCap), 2);
}

// With a blind estimate every cheap step raises f by exactly c_min, so a fly-reached node with error e_c
// has its cheap subspace explored to between e_c/(2 c_min) (or the subspace's own depth) and e_c/c_min.
TEST(CheapSubspace, DepthExploredBeneathExpensiveNodesTracksError) {
    std::function<bool(const TravelAction&)> cheap = [](const TravelAction& a) {
        return a.kind != TravelAction::Kind::fly;
    };
    for (auto inst : {make_swap(2), make_swap(3), make_rendezvous(1)}) {
        WithHeuristic t(TravelDomain(inst), HeuristicChoice::zero);
        SearchBudget b;
        b.prove_optimality = false;
        b.max_expansions = 1'000'000;
        SearchOptions o;
        o.record_trace = true;
        auto r = run_search(t, eval(EvalKind::cost), b, o);
        ASSERT_NE(r.best(), nullptr);
        const Cost c_min = 1;
        ReferenceSolution x{r.best()->cost, r.best()->size};
        auto depths = cheap_subspace_depths(r.trace, r.best()->expansions_at_discovery, cheap);
        ASSERT_FALSE(depths.empty());
        for (const auto& d : depths) {
            const Cost e_c = heuristic_error(d.g_cost, d.g_size, d.h, x).e_c;
            const Size room = cheap_subspace_eccentricity(t, d.state, cheap, kCap);
            EXPECT_LE(d.depth, e_c / c_min) << inst.name;
            EXPECT_GE(d.depth, std::min<Size>(e_c / (2 * c_min), room)) << inst.name;
        }
    }
}
