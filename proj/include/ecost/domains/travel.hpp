#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "ecost/core/problem.hpp"

namespace ecost {

struct TravelRoute {
    int a = 0;
    int b = 0;
    Cost cost = 0;
};

struct TravelPassenger {
    int origin = 0;
    int destination = 0;
};

/// Simplified travel logistics: planes fly between cities, passengers board and debark.
struct TravelInstance {
    std::string name = "travel";
    std::vector<std::string> cities;
    std::vector<TravelRoute> routes;  // undirected
    std::vector<int> planes;          // initial city of each plane
    std::vector<TravelPassenger> passengers;
    Cost board_cost = 1;
    Cost debark_cost = 1;
};

/// Packed assignment of planes to cities and passengers to cities or planes.
struct TravelState {
    std::uint64_t code = 0;
    friend auto operator<=>(const TravelState&, const TravelState&) = default;
};

struct TravelAction {
    enum class Kind : std::uint8_t { board, debark, fly };
    Kind kind = Kind::board;
    std::uint8_t passenger = 0;
    std::uint8_t plane = 0;
    std::uint8_t from = 0;
    std::uint8_t to = 0;

    friend bool operator==(const TravelAction&, const TravelAction&) = default;
};

}  // namespace ecost

template <>
struct std::hash<ecost::TravelState> {
    std::size_t operator()(const ecost::TravelState& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.code * 0x9E3779B97F4A7C15ULL);
    }
};

namespace ecost {

class TravelDomain {
  public:
    using State = TravelState;
    using Action = TravelAction;

    static constexpr int kMaxEntities = 32;

    struct Layout {
        std::array<std::uint8_t, kMaxEntities> plane_city{};
        std::array<std::uint8_t, kMaxEntities> passenger_loc{};  // < n_cities: city, else plane index + n_cities
    };

    explicit TravelDomain(TravelInstance inst) : inst_(std::move(inst)) {
        n_cities_ = static_cast<int>(inst_.cities.size());
        n_planes_ = static_cast<int>(inst_.planes.size());
        n_pass_ = static_cast<int>(inst_.passengers.size());
        if (n_cities_ < 1 || n_cities_ > 64) throw InvalidModel("travel: need between 1 and 64 cities");
        if (n_planes_ > kMaxEntities || n_pass_ > kMaxEntities) throw InvalidModel("travel: too many entities");
        if (inst_.board_cost < 1 || inst_.debark_cost < 1) throw InvalidModel("travel: board/debark cost must be >= 1");
        auto check_city = [&](int c, const char* what) {
            if (c < 0 || c >= n_cities_) throw InvalidModel(std::string("travel: ") + what + " refers to unknown city");
        };
        adjacency_.assign(n_cities_, {});
        for (const auto& r : inst_.routes) {
            check_city(r.a, "route");
            check_city(r.b, "route");
            if (r.a == r.b) throw InvalidModel("travel: self-loop route");
            if (r.cost < 1) throw InvalidModel("travel: route costs must be >= 1");
            for (auto [other, _] : adjacency_[r.a])
                if (other == r.b) throw InvalidModel("travel: duplicate route between two cities");
            adjacency_[r.a].push_back({r.b, r.cost});
            adjacency_[r.b].push_back({r.a, r.cost});
        }
        for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end(), [](auto& l, auto& r) { return l.first < r.first; });
        for (int c : inst_.planes) check_city(c, "plane");
        for (const auto& p : inst_.passengers) {
            check_city(p.origin, "passenger origin");
            check_city(p.destination, "passenger destination");
        }
        long double space = 1;
        for (int i = 0; i < n_planes_; ++i) space *= n_cities_;
        for (int i = 0; i < n_pass_; ++i) space *= (n_cities_ + n_planes_);
        if (space > static_cast<long double>(std::numeric_limits<std::int64_t>::max()))
            throw InvalidModel("travel: state space does not fit the 64-bit encoding");
        compute_distances();
        Layout init;
        for (int q = 0; q < n_planes_; ++q) init.plane_city[q] = static_cast<std::uint8_t>(inst_.planes[q]);
        for (int p = 0; p < n_pass_; ++p) init.passenger_loc[p] = static_cast<std::uint8_t>(inst_.passengers[p].origin);
        initial_ = encode(init);
    }

    const TravelInstance& instance() const { return inst_; }
    int city_count() const { return n_cities_; }
    int plane_count() const { return n_planes_; }
    int passenger_count() const { return n_pass_; }

    /// Cheapest flight cost between two cities (infinite if disconnected).
    Cost flight_distance(int a, int b) const { return dist_[a][b]; }
    /// Number of flights on the cheapest route (fewest among equally cheap ones).
    Size flight_hops_cheapest(int a, int b) const { return hops_cheapest_[a][b]; }
    Size flight_hops_fewest(int a, int b) const { return hops_fewest_[a][b]; }

    State initial_state() const { return initial_; }

    bool is_goal(const State& s) const {
        Layout l = decode(s);
        for (int p = 0; p < n_pass_; ++p)
            if (l.passenger_loc[p] != inst_.passengers[p].destination) return false;
        return true;
    }

    /// Boards (by passenger, then plane), debarks (by passenger), flights (by plane, then city).
    void successors(const State& s, std::vector<Edge<State, Action>>& out) const {
        const Layout l = decode(s);
        for (int p = 0; p < n_pass_; ++p) {
            int loc = l.passenger_loc[p];
            if (loc >= n_cities_) continue;
            for (int q = 0; q < n_planes_; ++q) {
                if (l.plane_city[q] != loc) continue;
                Layout nl = l;
                nl.passenger_loc[p] = static_cast<std::uint8_t>(n_cities_ + q);
                out.push_back({encode(nl), Action{Action::Kind::board, u8(p), u8(q), u8(loc), u8(loc)}, inst_.board_cost});
            }
        }
        for (int p = 0; p < n_pass_; ++p) {
            int loc = l.passenger_loc[p];
            if (loc < n_cities_) continue;
            int q = loc - n_cities_;
            int city = l.plane_city[q];
            Layout nl = l;
            nl.passenger_loc[p] = static_cast<std::uint8_t>(city);
            out.push_back({encode(nl), Action{Action::Kind::debark, u8(p), u8(q), u8(city), u8(city)}, inst_.debark_cost});
        }
        for (int q = 0; q < n_planes_; ++q) {
            int from = l.plane_city[q];
            for (auto [to, cost] : adjacency_[from]) {
                Layout nl = l;
                nl.plane_city[q] = static_cast<std::uint8_t>(to);
                out.push_back({encode(nl), Action{Action::Kind::fly, 0, u8(q), u8(from), u8(to)}, cost});
            }
        }
    }

    /// Relaxation-style estimates. Every unfinished passenger needs its remaining
    /// board/debark actions; flights are bounded by the farthest passenger
    /// (admissible) or summed over distinct origin cities (satisficing).
    HeuristicValues heuristics(const State& s) const {
        const Layout l = decode(s);
        Cost handling_cost = 0;
        Size handling_actions = 0;
        Cost max_flight = 0;
        // per origin city: farthest cost, fewest-hop and cheapest-route hop counts
        std::array<Cost, 64> origin_cost{};
        std::array<Size, 64> origin_hops{};
        std::array<Size, 64> origin_hops_hat{};
        std::array<bool, 64> used{};
        for (int p = 0; p < n_pass_; ++p) {
            int loc = l.passenger_loc[p];
            int dest = inst_.passengers[p].destination;
            if (loc == dest) continue;
            int city = loc;
            if (loc >= n_cities_) {
                city = l.plane_city[loc - n_cities_];
                handling_cost += inst_.debark_cost;
                handling_actions += 1;
            } else {
                handling_cost += inst_.board_cost + inst_.debark_cost;
                handling_actions += 2;
            }
            Cost d = dist_[city][dest];
            max_flight = std::max(max_flight, d);
            used[city] = true;
            origin_cost[city] = std::max(origin_cost[city], d);
            origin_hops[city] = std::max(origin_hops[city], hops_fewest_[city][dest]);
            origin_hops_hat[city] = std::max(origin_hops_hat[city], hops_cheapest_[city][dest]);
        }
        HeuristicValues h;
        h.h_c_admissible = handling_cost + max_flight;
        h.h_c = handling_cost;
        h.h_s = handling_actions;
        h.h_s_hat = handling_actions;
        for (int c = 0; c < n_cities_; ++c) {
            if (!used[c]) continue;
            h.h_c += origin_cost[c];
            h.h_s += origin_hops[c];
            h.h_s_hat += origin_hops_hat[c];
        }
        return h;
    }

    std::vector<ActionCost> cost_table() const {
        std::vector<ActionCost> table{{"board", inst_.board_cost}, {"debark", inst_.debark_cost}};
        for (const auto& r : inst_.routes)
            table.push_back({"fly " + inst_.cities[r.a] + "-" + inst_.cities[r.b], r.cost});
        return table;
    }

    std::string state_label(const State& s) const {
        const Layout l = decode(s);
        std::string out = "planes[";
        for (int q = 0; q < n_planes_; ++q) out += (q ? "," : "") + inst_.cities[l.plane_city[q]];
        out += "] passengers[";
        for (int p = 0; p < n_pass_; ++p) {
            int loc = l.passenger_loc[p];
            out += (p ? "," : "");
            out += loc < n_cities_ ? inst_.cities[loc] : "plane" + std::to_string(loc - n_cities_);
        }
        return out + "]";
    }

    std::string action_label(const Action& a) const {
        switch (a.kind) {
            case Action::Kind::board:
                return "board(p" + std::to_string(a.passenger) + ",plane" + std::to_string(a.plane) + ")";
            case Action::Kind::debark:
                return "debark(p" + std::to_string(a.passenger) + ",plane" + std::to_string(a.plane) + ")";
            case Action::Kind::fly:
                return "fly(plane" + std::to_string(a.plane) + "," + inst_.cities[a.from] + "," + inst_.cities[a.to] + ")";
        }
        return "?";
    }

    std::string key() const { return inst_.name; }

    Layout decode(const State& s) const {
        Layout l;
        std::uint64_t code = s.code;
        const auto loc_radix = static_cast<std::uint64_t>(n_cities_ + n_planes_);
        for (int p = n_pass_ - 1; p >= 0; --p) {
            l.passenger_loc[p] = static_cast<std::uint8_t>(code % loc_radix);
            code /= loc_radix;
        }
        for (int q = n_planes_ - 1; q >= 0; --q) {
            l.plane_city[q] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(n_cities_));
            code /= static_cast<std::uint64_t>(n_cities_);
        }
        return l;
    }

    State encode(const Layout& l) const {
        std::uint64_t code = 0;
        for (int q = 0; q < n_planes_; ++q) code = code * static_cast<std::uint64_t>(n_cities_) + l.plane_city[q];
        const auto loc_radix = static_cast<std::uint64_t>(n_cities_ + n_planes_);
        for (int p = 0; p < n_pass_; ++p) code = code * loc_radix + l.passenger_loc[p];
        return State{code};
    }

  private:
    static std::uint8_t u8(int v) { return static_cast<std::uint8_t>(v); }

    void compute_distances() {
        const Cost inf = kInfiniteCost / 4;
        dist_.assign(n_cities_, std::vector<Cost>(n_cities_, inf));
        hops_cheapest_.assign(n_cities_, std::vector<Size>(n_cities_, 0));
        hops_fewest_.assign(n_cities_, std::vector<Size>(n_cities_, 0));
        for (int src = 0; src < n_cities_; ++src) {
            // lexicographic (cost, hops) Dijkstra
            using Item = std::pair<std::pair<Cost, Size>, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            std::vector<std::pair<Cost, Size>> best(n_cities_, {inf, 0});
            best[src] = {0, 0};
            pq.push({{0, 0}, src});
            while (!pq.empty()) {
                auto [key, u] = pq.top();
                pq.pop();
                if (key != best[u]) continue;
                for (auto [v, c] : adjacency_[u]) {
                    std::pair<Cost, Size> cand{key.first + c, key.second + 1};
                    if (cand < best[v]) {
                        best[v] = cand;
                        pq.push({cand, v});
                    }
                }
            }
            std::vector<Size> hops(n_cities_, -1);
            std::queue<int> bfs;
            hops[src] = 0;
            bfs.push(src);
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (auto [v, c] : adjacency_[u])
                    if (hops[v] < 0) {
                        hops[v] = hops[u] + 1;
                        bfs.push(v);
                    }
            }
            for (int dst = 0; dst < n_cities_; ++dst) {
                dist_[src][dst] = best[dst].first;
                hops_cheapest_[src][dst] = best[dst].second;
                hops_fewest_[src][dst] = std::max<Size>(hops[dst], 0);
            }
        }
    }

    TravelInstance inst_;
    int n_cities_ = 0;
    int n_planes_ = 0;
    int n_pass_ = 0;
    std::vector<std::vector<std::pair<int, Cost>>> adjacency_;
    std::vector<std::vector<Cost>> dist_;
    std::vector<std::vector<Size>> hops_cheapest_;
    std::vector<std::vector<Size>> hops_fewest_;
    State initial_;
};

struct RendezvousOptions {
    int planes = 4;
    bool adjacent_origins = false;  // passengers start at opposite corners unless set
    Cost diagonal_cost = 7000;
    Cost exterior_cost = 10000;
};

/// Five cities: a center and four corners on a square. k passengers wait at each of
/// two corners and must meet at the center; one plane starts at each corner.
inline TravelInstance make_rendezvous(int k, RendezvousOptions opt = {}) {
    if (k < 1) throw InvalidModel("rendezvous: k must be >= 1");
    if (opt.planes < 1 || opt.planes > 4) throw InvalidModel("rendezvous: between 1 and 4 planes");
    TravelInstance t;
    t.name = "travel-rendezvous(k=" + std::to_string(k) + ",planes=" + std::to_string(opt.planes) +
             (opt.adjacent_origins ? ",adjacent" : ",opposite") + ",diag=" + std::to_string(opt.diagonal_cost) +
             ",ext=" + std::to_string(opt.exterior_cost) + ")";
    t.cities = {"center", "c1", "c2", "c3", "c4"};
    for (int c = 1; c <= 4; ++c) t.routes.push_back({0, c, opt.diagonal_cost});
    for (int c = 1; c <= 4; ++c) t.routes.push_back({c, c % 4 + 1, opt.exterior_cost});
    for (int q = 0; q < opt.planes; ++q) t.planes.push_back(q + 1);
    const int second = opt.adjacent_origins ? 2 : 3;
    for (int i = 0; i < k; ++i) t.passengers.push_back({1, 0});
    for (int i = 0; i < k; ++i) t.passengers.push_back({second, 0});
    return t;
}

struct SwapOptions {
    int passengers_per_side = 1;
    Cost fly_cost = 10000;
};

/// A chain of cities; passengers at each endpoint must trade places. A plane starts at each end.
inline TravelInstance make_swap(int n_cities, SwapOptions opt = {}) {
    if (n_cities < 2) throw InvalidModel("swap: need at least 2 cities");
    if (opt.passengers_per_side < 1) throw InvalidModel("swap: need at least one passenger per side");
    TravelInstance t;
    t.name = "travel-swap(n=" + std::to_string(n_cities) + ",passengers=" + std::to_string(opt.passengers_per_side) +
             ",fly=" + std::to_string(opt.fly_cost) + ")";
    for (int c = 0; c < n_cities; ++c) t.cities.push_back("c" + std::to_string(c));
    for (int c = 0; c + 1 < n_cities; ++c) t.routes.push_back({c, c + 1, opt.fly_cost});
    t.planes = {0, n_cities - 1};
    for (int i = 0; i < opt.passengers_per_side; ++i) t.passengers.push_back({0, n_cities - 1});
    for (int i = 0; i < opt.passengers_per_side; ++i) t.passengers.push_back({n_cities - 1, 0});
    return t;
}

}  // namespace ecost
