#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "ecost/domains/adapters.hpp"
#include "ecost/domains/counter.hpp"
#include "ecost/domains/explicit_graph.hpp"
#include "ecost/domains/travel.hpp"
#include "ecost/domains/tree.hpp"
#include "ecost/evaluators/epsilon.hpp"
#include "ecost/evaluators/evaluate.hpp"
#include "ecost/search/engine.hpp"
#include "support/reference.hpp"

using namespace ecost;

namespace {

EvaluatorConfig eval(EvalKind kind) {
    EvaluatorConfig c;
    c.kind = kind;
    return c;
}

template <SearchProblem P>
std::vector<typename P::State> expansion_order(const P& p, const EvaluatorConfig& cfg, SearchBudget b = {}) {
    SearchOptions o;
    o.record_expansions = true;
    return run_search(p, cfg, b, o).expanded_states;
}

/// Random strongly connected unit-cost graph with exact distance estimates in every heuristic slot.
ExplicitGraph unit_graph(std::uint32_t n, std::uint64_t seed, bool with_h) {
    std::mt19937_64 rng(seed);
    ExplicitGraph g(n, 0, {n - 1}, "unit" + std::to_string(seed));
    for (std::uint32_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        auto a = static_cast<std::uint32_t>(rng() % n), b = static_cast<std::uint32_t>(rng() % n);
        if (a != b) g.add_edge(a, b, 1);
    }
    if (with_h) {
        // backward BFS distances
        std::vector<std::vector<std::uint32_t>> rev(n);
        for (const auto& e : g.edges()) rev[e.to].push_back(e.from);
        std::vector<Cost> d(n, -1);
        std::vector<std::uint32_t> q{n - 1};
        d[n - 1] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (auto u : rev[q[i]])
                if (d[u] < 0) {
                    d[u] = d[q[i]] + 1;
                    q.push_back(u);
                }
        for (std::uint32_t v = 0; v < n; ++v) {
            Cost h = d[v] < 0 ? 0 : d[v];
            g.set_heuristic(v, {h, h, h, h});
        }
    }
    return g;
}

}  // namespace

TEST(EvalCost, AddsWeightedCostEstimate) {
    HeuristicValues h{4, 0, 0, 0};
    EXPECT_EQ(eval_cost({3, 9}, h, Rational(1)).f, Rational(7));
    EXPECT_EQ(eval_cost({3, 9}, h, Rational(5)).f, Rational(23));
    EXPECT_EQ(eval_cost({3, 9}, h, Rational(5)).h_term, Rational(20));
}

TEST(EvalCost, ZeroHeuristicExpandsInDijkstraOrder) {
    CounterDomain c(7, 100);
    const auto g = ref::dijkstra(c);
    auto order = expansion_order(c, eval(EvalKind::cost));
    ASSERT_FALSE(order.empty());
    for (std::size_t i = 1; i < order.size(); ++i) EXPECT_LE(g.at(order[i - 1]), g.at(order[i]));
    // Everything strictly cheaper than the optimum is closed.
    const Cost opt = ref::optimal_cost(c);
    std::set<std::uint32_t> expanded(order.begin(), order.end());
    for (const auto& [s, d] : g)
        if (d < opt) { EXPECT_TRUE(expanded.contains(s)) << s; }
}

TEST(EvalSize, AddsWeightedDepthEstimate) {
    HeuristicValues h{0, 3, 0, 0};
    EXPECT_EQ(eval_size({100, 2}, h, Rational(2)).f, Rational(8));
}

TEST(EvalSize, CounterWrapGoalGeneratedAtTwo) {
    CounterDomain c(20, (1u << 20) - 2);
    SearchBudget b;
    b.prove_optimality = false;
    b.max_expansions = 100;
    auto r = run_search(c, eval(EvalKind::size), b);
    ASSERT_NE(r.best(), nullptr);
    EXPECT_EQ(r.best()->size, 2);  // f_s = g_s with h = 0
    EXPECT_EQ(r.best()->cost, (1 << 19) + 1);
    EXPECT_LE(*r.metrics.discovery_expansions(), 5u);
}

TEST(EvalSize, MatchesCostOrderOnUnitCosts) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        for (bool with_h : {false, true}) {
            auto g = unit_graph(30, seed, with_h);
            EXPECT_EQ(expansion_order(g, eval(EvalKind::size)), expansion_order(g, eval(EvalKind::cost)))
                << "seed " << seed;
        }
}

TEST(EvalSizeCostSensitive, UsesCheapestCompletionDepth) {
    HeuristicValues h{0, 2, 4, 0};
    EXPECT_EQ(eval_size_cost_sensitive({50, 3}, h, Rational(1)).f, Rational(7));
    EXPECT_EQ(eval_size({50, 3}, h, Rational(1)).f, Rational(5));
    EXPECT_EQ(eval_size_cost_sensitive({50, 3}, HeuristicValues{}, Rational(1)).f, Rational(3));
}

TEST(EvalSizeCostSensitive, RendezvousRootMatchesOptimalPlanLength) {
    TravelDomain t(make_rendezvous(1));
    // lexicographic (cost, size) Dijkstra over the enumerated space
    using S = TravelState;
    std::map<S, std::pair<Cost, Size>> best{{t.initial_state(), {0, 0}}};
    std::set<std::tuple<Cost, Size, S>> frontier{{0, 0, t.initial_state()}};
    std::pair<Cost, Size> goal{-1, -1};
    while (!frontier.empty()) {
        auto [c, s, v] = *frontier.begin();
        frontier.erase(frontier.begin());
        if (t.is_goal(v)) {
            goal = {c, s};
            break;
        }
        for (const auto& e : ref::children(t, v)) {
            std::pair<Cost, Size> k{c + e.cost, s + 1};
            auto it = best.find(e.target);
            if (it != best.end() && it->second <= k) continue;
            if (it != best.end()) frontier.erase({it->second.first, it->second.second, e.target});
            best[e.target] = k;
            frontier.insert({k.first, k.second, e.target});
        }
    }
    ASSERT_EQ(goal.first, 14004);
    EXPECT_EQ(goal.second, 6);
    EXPECT_EQ(t.heuristics(t.initial_state()).h_s_hat, goal.second);
}

TEST(EvalHybrid, DegenerateMixesReduceToComponents) {
    for (const auto& problem : {make_swap(2), make_swap(3), make_rendezvous(1)}) {
        TravelDomain t(problem);
        SearchBudget b;
        b.prove_optimality = false;
        b.max_expansions = 3000;
        auto mix0 = eval(EvalKind::hybrid);
        mix0.hybrid_mix = Rational(0);
        auto mix1 = eval(EvalKind::hybrid);
        mix1.hybrid_mix = Rational(1);
        EXPECT_EQ(expansion_order(t, mix0, b), expansion_order(t, eval(EvalKind::size_cost_sensitive), b));
        EXPECT_EQ(expansion_order(t, mix1, b), expansion_order(t, eval(EvalKind::cost), b));
    }
}

TEST(EvalHybrid, DirectFlightOutranksBoardingSpreeOnlyUnderHybrid) {
    TravelDomain t(make_swap(2));
    const auto root = t.initial_state();
    // Hand-derived estimates at the root layout: 2 passengers x (board + debark), one 10000 flight per origin.
    const HeuristicValues h_root = t.heuristics(root);
    EXPECT_EQ(h_root.h_c, 4 + 10000 + 10000);
    EXPECT_EQ(h_root.h_s_hat, 4 + 1 + 1);
    TravelState flown{};
    for (const auto& e : ref::children(t, root))
        if (e.action.kind == TravelAction::Kind::fly && e.action.plane == 0) flown = e.target;
    const HeuristicValues h_flown = t.heuristics(flown);
    EXPECT_EQ(h_flown.h_c, 4 + 10000 + 10000);
    EXPECT_EQ(h_flown.h_s_hat, 6);

    // Direct flight: one fly edge. Boarding spree: board and debark p0 twice, back at the root layout.
    const PathMeasures direct{10000, 1}, spree{4, 4};
    EvalParams params{Rational(1), 10000, Rational(1, 2)};
    auto fc_direct = eval_cost(direct, h_flown, Rational(1)).f;
    auto fc_spree = eval_cost(spree, h_root, Rational(1)).f;
    auto hy_direct = eval_hybrid(direct, h_flown, params).f;
    auto hy_spree = eval_hybrid(spree, h_root, params).f;
    EXPECT_EQ(fc_direct, Rational(30004));
    EXPECT_EQ(fc_spree, Rational(20008));
    EXPECT_EQ(hy_direct, Rational(1, 2) * Rational(30004, 10000) + Rational(7, 2));
    EXPECT_EQ(hy_spree, Rational(1, 2) * Rational(20008, 10000) + Rational(10, 2));
    EXPECT_LT(fc_spree, fc_direct);
    EXPECT_LT(hy_direct, hy_spree);
}

TEST(EvalNegatedCost, NegatesCostEstimate) {
    HeuristicValues h{4, 0, 0, 0};
    EXPECT_EQ(eval_negated_cost({3, 1}, h, Rational(1)).f, Rational(-7));
}

TEST(EvalNegatedCost, OptimalSolutionPoppedRightAfterGenerationUnderKnownBound) {
    CounterDomain c(4, 14);
    SearchOptions o;
    o.record_trace = true;
    o.cost_bound = 9;
    auto r = run_search(c, eval(EvalKind::negated_cost), SearchBudget{}, o);
    ASSERT_FALSE(r.incumbents.empty());
    EXPECT_EQ(r.incumbents.front().cost, 9);
    const auto at = r.incumbents.front().expansions_at_discovery;
    ASSERT_GE(at, 1u);
    EXPECT_EQ(r.trace[at - 1].state, 15u);  // the goal's parent was the very last expansion
}

TEST(EvalDelayed, ChainExcessEqualsLastEdge) {
    // s0 -(3)-> s1 -(1)-> s2 with perfect h_c = (4, 1, 0): f* = 4
    const HeuristicValues h0{4, 0, 0, 4}, h1{1, 0, 0, 1};
    EvalParams p;
    EXPECT_EQ(eval_delayed(EvalKind::cost, {3, 1}, h0, p).f, Rational(7));
    EXPECT_EQ(eval_delayed(EvalKind::cost, {4, 2}, h1, p).f, Rational(5));
    EXPECT_EQ(eval_delayed(EvalKind::cost, {0, 0}, h0, p).f, Rational(4));  // root uses its own h
}

TEST(EvalDelayed, SiblingsOrderedByOwnCost) {
    ExplicitGraph g(4, 0, {3}, "siblings");
    g.add_edge(0, 1, 5).add_edge(0, 2, 2).add_edge(1, 3, 1).add_edge(2, 3, 9);
    g.set_heuristic(1, {0, 0, 0, 0}).set_heuristic(2, {50, 0, 0, 0});
    auto cfg = eval(EvalKind::cost);
    cfg.delayed = true;
    auto order = expansion_order(g, cfg);
    ASSERT_GE(order.size(), 3u);
    EXPECT_EQ(order[1], 2u);  // cheaper sibling first despite its larger own estimate
    EXPECT_EQ(order[2], 1u);
    auto eager = expansion_order(g, eval(EvalKind::cost));
    EXPECT_EQ(eager[1], 1u);
}

TEST(DualOpen, AlternatesLists) {
    EXPECT_EQ(dual_open_select(0), 0u);
    EXPECT_EQ(dual_open_select(1), 1u);
    EXPECT_EQ(dual_open_select(2), 0u);
    EXPECT_EQ(dual_open_select(3), 1u);
}

TEST(DualOpen, IdenticalListsMatchSingleList) {
    for (auto kind : {EvalKind::cost, EvalKind::size, EvalKind::size_cost_sensitive}) {
        TravelDomain t(make_swap(3));
        auto dual = eval(kind);
        dual.second_kind = kind;
        auto a = expansion_order(t, dual);
        auto b = expansion_order(t, eval(kind));
        std::multiset<TravelState> ma(a.begin(), a.end()), mb(b.begin(), b.end());
        EXPECT_EQ(ma, mb);
    }
}

TEST(DualOpen, MatchesTwoQueueReferenceOnSwap) {
    TravelDomain t(make_swap(2));
    auto cfg = eval(EvalKind::cost);
    cfg.second_kind = EvalKind::size_cost_sensitive;
    auto engine = expansion_order(t, cfg);

    // Reference: two ordered sets keyed (f, h-term, -serial), shared closed map and incumbent.
    struct Node {
        TravelState s;
        Cost g;
        Size d;
        bool done = false;
    };
    std::vector<Node> nodes{{t.initial_state(), 0, 0}};
    using Key = std::tuple<Rational, Rational, std::int64_t, std::size_t>;
    std::set<Key> lists[2];
    std::int64_t serial = 0;
    auto push = [&](std::size_t i) {
        auto h = t.heuristics(nodes[i].s);
        lists[0].insert({Rational(nodes[i].g + h.h_c), Rational(h.h_c), -serial++, i});
        lists[1].insert({Rational(nodes[i].d + h.h_s_hat), Rational(h.h_s_hat), -serial++, i});
    };
    push(0);
    std::map<TravelState, Cost> closed;
    Cost incumbent = kInfiniteCost;
    std::vector<TravelState> expected;
    while (!lists[0].empty() || !lists[1].empty()) {
        std::size_t l = expected.size() % 2;
        if (lists[l].empty()) l = 1 - l;
        auto [f, ht, ser, i] = *lists[l].begin();
        lists[l].erase(lists[l].begin());
        if (nodes[i].done) continue;
        nodes[i].done = true;
        if (nodes[i].g + t.heuristics(nodes[i].s).h_c_admissible >= incumbent) continue;
        if (t.is_goal(nodes[i].s)) {
            incumbent = nodes[i].g;
            continue;
        }
        auto it = closed.find(nodes[i].s);
        if (it != closed.end() && it->second <= nodes[i].g) continue;
        closed[nodes[i].s] = nodes[i].g;
        expected.push_back(nodes[i].s);
        const Node parent = nodes[i];
        for (const auto& e : ref::children(t, parent.s)) {
            nodes.push_back({e.target, parent.g + e.cost, parent.d + 1});
            push(nodes.size() - 1);
        }
    }
    EXPECT_EQ(engine, expected);
    EXPECT_GT(engine.size(), 4u);
}

TEST(Epsilon, MatchesCostSpectrum) {
    EXPECT_EQ(epsilon_of(TravelDomain(make_rendezvous(1))).epsilon, Rational(1, 10000));
    EXPECT_EQ(epsilon_of(TravelDomain(make_swap(3))).epsilon, Rational(1, 10000));
    for (int k = 2; k <= 20; ++k) EXPECT_EQ(epsilon_of(CounterDomain(k, 1)).epsilon, Rational(2, std::int64_t{1} << k));
    std::vector<ActionCost> uniform{{"a", 7}, {"b", 7}, {"c", 7}};
    auto r = epsilon_of(std::span<const ActionCost>(uniform));
    EXPECT_EQ(r.epsilon, Rational(1));
    for (const auto& n : r.normalized) EXPECT_EQ(n.cost, Rational(1));
    TreeInstance ti;
    ti.c_high = 4;
    ti.c_low = 1;
    EXPECT_EQ(epsilon_of(TreeDomain(ti)).epsilon, Rational(1, 4));
}

TEST(EvaluatorConfig, ValidatesWeightAndMix) {
    auto c = eval(EvalKind::cost);
    c.weight = Rational(1, 2);
    EXPECT_THROW(validate(c), InvalidConfig);
    c.weight = Rational(5);
    EXPECT_NO_THROW(validate(c));
    c.hybrid_mix = Rational(1, 3);
    EXPECT_THROW(validate(c), InvalidConfig);
    auto h = eval(EvalKind::hybrid);
    h.hybrid_mix = Rational(3, 2);
    EXPECT_THROW(validate(h), InvalidConfig);
    h.hybrid_mix = Rational(1, 3);
    EXPECT_NO_THROW(validate(h));
    try {
        parse_eval_kind("bogus");
        FAIL();
    } catch (const InvalidConfig& e) {
        EXPECT_EQ(e.key(), "evaluator");
    }
    EXPECT_EQ(parse_tie_break("fifo"), TieBreak::fifo);
    EXPECT_EQ(describe(h), "hybrid mix=1/3");
}
