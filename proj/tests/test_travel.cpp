#include <gtest/gtest.h>

#include <queue>

#include "ecost/domains/adapters.hpp"
#include "ecost/domains/travel.hpp"
#include "ecost/evaluators/epsilon.hpp"
#include "support/reference.hpp"

using namespace ecost;

namespace {

using Kind = TravelAction::Kind;

int count_kind(const std::vector<Edge<TravelState, TravelAction>>& e, Kind k) {
    int n = 0;
    for (const auto& x : e) n += x.action.kind == k;
    return n;
}

/// Cost-to-go for every reachable state, by multi-source Dijkstra from the goals over reversed edges.
std::map<TravelState, Cost> cost_to_go(const TravelDomain& t) {
    auto states = ref::reachable(t);
    std::map<TravelState, std::vector<std::pair<TravelState, Cost>>> rev;
    for (const auto& s : states)
        for (const auto& e : ref::children(t, s)) rev[e.target].push_back({s, e.cost});
    std::map<TravelState, Cost> dist;
    using Item = std::pair<Cost, TravelState>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (const auto& s : states)
        if (t.is_goal(s)) {
            dist[s] = 0;
            pq.push({0, s});
        }
    while (!pq.empty()) {
        auto [d, s] = pq.top();
        pq.pop();
        if (d != dist[s]) continue;
        for (auto [p, c] : rev[s]) {
            auto it = dist.find(p);
            if (it == dist.end() || d + c < it->second) {
                dist[p] = d + c;
                pq.push({d + c, p});
            }
        }
    }
    return dist;
}

}  // namespace

TEST(Travel, RendezvousCornerPlaneFliesDiagonalOrExterior) {
    TravelDomain t(make_rendezvous(1));
    auto e = ref::children(t, t.initial_state());
    EXPECT_EQ(count_kind(e, Kind::board), 2);
    EXPECT_EQ(count_kind(e, Kind::debark), 0);
    EXPECT_EQ(count_kind(e, Kind::fly), 12);
    std::vector<Cost> plane0;
    for (const auto& x : e)
        if (x.action.kind == Kind::fly && x.action.plane == 0) plane0.push_back(x.cost);
    EXPECT_EQ(plane0, (std::vector<Cost>{7000, 10000, 10000}));
    EXPECT_EQ(e.front().cost, 1);
    EXPECT_EQ(epsilon_of(t).epsilon, Rational(1, 10000));
}

TEST(Travel, SwapRootOffersTwoBoardsAndTwoFlights) {
    TravelDomain t(make_swap(2));
    auto e = ref::children(t, t.initial_state());
    ASSERT_EQ(e.size(), 4u);
    EXPECT_EQ(count_kind(e, Kind::board), 2);
    EXPECT_EQ(count_kind(e, Kind::fly), 2);
    EXPECT_EQ(t.action_label(e[0].action), "board(p0,plane0)");
    EXPECT_EQ(t.action_label(e[2].action), "fly(plane0,c0,c1)");
}

TEST(Travel, RootHeuristics) {
    TravelDomain r(make_rendezvous(1));
    auto hr = r.heuristics(r.initial_state());
    EXPECT_EQ(hr.h_c_admissible, 7004);
    EXPECT_EQ(hr.h_c, 14004);
    EXPECT_EQ(hr.h_s, 6);
    EXPECT_EQ(hr.h_s_hat, 6);
    TravelDomain s(make_swap(2));
    auto hs = s.heuristics(s.initial_state());
    EXPECT_EQ(hs.h_c_admissible, 10004);
    EXPECT_EQ(hs.h_c, 20004);
    EXPECT_EQ(hs.h_s, 6);
}

TEST(Travel, CheapestRouteMayUseMoreHops) {
    // c1 -> c2: one exterior flight (10000) versus two diagonals (14000)
    TravelDomain t(make_rendezvous(1, {.planes = 4, .adjacent_origins = false, .diagonal_cost = 4000, .exterior_cost = 10000}));
    EXPECT_EQ(t.flight_distance(1, 2), 8000);
    EXPECT_EQ(t.flight_hops_cheapest(1, 2), 2);
    EXPECT_EQ(t.flight_hops_fewest(1, 2), 1);
}

TEST(Travel, StateCounts) {
    EXPECT_EQ(ref::reachable(TravelDomain(make_swap(2))).size(), 64u);
    EXPECT_EQ(ref::reachable(TravelDomain(make_swap(3))).size(), 225u);
}

TEST(Travel, EncodeDecodeRoundTrip) {
    TravelDomain t(make_rendezvous(2));
    for (const auto& e : ref::children(t, t.initial_state())) EXPECT_EQ(t.encode(t.decode(e.target)), e.target);
}

TEST(Travel, EveryActionHasAnEqualCostInverse) {
    TravelDomain t(make_swap(3));
    for (const auto& s : ref::reachable(t))
        for (const auto& e : ref::children(t, s)) {
            bool back = false;
            for (const auto& r : ref::children(t, e.target)) back |= r.target == s && r.cost == e.cost;
            EXPECT_TRUE(back) << t.state_label(s) << " via " << t.action_label(e.action);
        }
}

TEST(Travel, AdmissibleEstimateNeverOverestimates) {
    for (auto inst : {make_swap(2), make_swap(3), make_swap(2, {.passengers_per_side = 2})}) {
        TravelDomain t(inst);
        auto h_star = cost_to_go(t);
        for (const auto& [s, d] : h_star) {
            auto h = t.heuristics(s);
            EXPECT_LE(h.h_c_admissible, d) << t.state_label(s);
            EXPECT_LE(h.h_c_admissible, h.h_c);
            if (t.is_goal(s)) { EXPECT_EQ(h, HeuristicValues{}); }
        }
        EXPECT_EQ(h_star.at(t.initial_state()), ref::optimal_cost(t));
    }
}

TEST(Travel, KnownOptima) {
    EXPECT_EQ(ref::optimal_cost(TravelDomain(make_swap(2))), 20004);
    EXPECT_EQ(ref::optimal_cost(TravelDomain(make_swap(3))), 40004);
}

TEST(Travel, ZeroHeuristicAdapter) {
    WithHeuristic z(TravelDomain(make_swap(2)), HeuristicChoice::zero);
    EXPECT_EQ(z.heuristics(z.initial_state()), HeuristicValues{});
    WithHeuristic a(TravelDomain(make_swap(2)), HeuristicChoice::admissible);
    EXPECT_EQ(a.heuristics(a.initial_state()).h_c, 10004);
}

TEST(Travel, RejectsMalformedInstances) {
    EXPECT_THROW(make_swap(1), InvalidModel);
    EXPECT_THROW(make_rendezvous(0), InvalidModel);
    TravelInstance bad = make_swap(2);
    bad.routes.push_back({0, 5, 3});
    EXPECT_THROW(TravelDomain{bad}, InvalidModel);
    TravelInstance twice = make_swap(2);
    twice.routes.push_back({1, 0, 5});
    EXPECT_THROW(TravelDomain{twice}, InvalidModel);
}
