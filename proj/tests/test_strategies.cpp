#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <vector>

#include "doctest.h"

#include "containment/errors.hpp"
#include "containment/game.hpp"
#include "containment/graph.hpp"
#include "containment/graph6.hpp"
#include "containment/matching.hpp"
#include "containment/neighborhoods.hpp"
#include "containment/strategies.hpp"

using namespace containment;

namespace {

struct FixedRobber : RobberStrategy {
    int start;
    explicit FixedRobber(int v) : start(v) {}
    std::string name() const override { return "fixed"; }
    int place(const Graph&, const GameState&, Rng&) override { return start; }
    int move(const Graph&, const GameState& s, Rng&) override { return s.robber; }
};

struct StaticCops : CopStrategy {
    std::vector<int> placement;
    explicit StaticCops(std::vector<int> p) : placement(std::move(p)) {}
    std::string name() const override { return "static"; }
    std::vector<int> place(const Graph&, int, Rng&) override { return placement; }
    CopMove move(const Graph&, const GameState&, Rng&) override { return {}; }
};

bool edges_touch(const Graph& g, int e, int f) {
    if (e == f) return true;
    const auto [a, b] = g.edge(e);
    const auto [x, y] = g.edge(f);
    return a == x || a == y || b == x || b == y;
}

// oracle: independent cop-count per edge distance from y in g minus {v, x}
std::vector<long long> danger_counts_oracle(const Graph& g, const std::vector<int>& cops,
                                            int y, int v, int x, int max_r) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[y] = 0;
    q.push(y);
    while (!q.empty()) {
        const int a = q.front();
        q.pop();
        for (auto [b, e] : g.adj(a)) {
            if (b == v || b == x || dist[b] >= 0) continue;
            dist[b] = dist[a] + 1;
            q.push(b);
        }
    }
    std::vector<long long> counts(max_r, 0);
    for (int ce : cops) {
        const auto [a, b] = g.edge(ce);
        if (a == v || b == v || a == x || b == x) continue;
        int dmin = -1;
        for (int w : {a, b}) {
            if (dist[w] >= 0 && (dmin < 0 || dist[w] < dmin)) dmin = dist[w];
        }
        const int r = dmin < 0 ? -1 : dmin + 1;
        if (r >= 1 && r <= max_r) ++counts[r - 1];
    }
    return counts;
}

} // namespace

TEST_CASE("random cops place a uniformly drawn edge prefix") {
    const Graph g = gen_gnp(12, 0.4, 8);
    auto cops = make_random_cops();
    Rng r1(5), r2(5), r3(6);
    const auto p1 = cops->place(g, 4, r1);
    const auto p2 = make_random_cops()->place(g, 4, r2);
    const auto p3 = make_random_cops()->place(g, 4, r3);
    CHECK(p1 == p2);
    CHECK(p1 != p3);
    CHECK(p1.size() == 4);
    CHECK(std::set<int>(p1.begin(), p1.end()).size() == 4); // distinct while k <= m
    for (int e : p1) CHECK(e < g.m());
    // k > m cycles the permutation instead of failing
    Rng r4(5);
    const auto big = make_random_cops()->place(g, g.m() + 3, r4);
    CHECK(static_cast<int>(big.size()) == g.m() + 3);
    CHECK_THROWS_AS(cops->place(g, 0, r1), ValidationError);
    CHECK_THROWS_AS(cops->place(Graph(3), 1, r1), ValidationError);
}

TEST_CASE("greedy cops take the highest degree-sum edges") {
    const Graph g = path_graph(4); // sums: e0 = 3, e1 = 4, e2 = 3
    auto cops = make_greedy_cops();
    Rng rng(1);
    CHECK(cops->place(g, 1, rng) == std::vector<int>{1});
    CHECK(make_greedy_cops()->place(g, 2, rng) == std::vector<int>{1, 0});
    CHECK(make_greedy_cops()->place(g, 3, rng) == std::vector<int>{1, 0, 2});
}

TEST_CASE("greedy cops chase down a sitting robber on a path") {
    const Graph g = path_graph(5);
    auto cops = make_greedy_cops();
    auto robber = make_sitting_robber();
    PlayConfig cfg;
    cfg.k = 1;
    const auto trace = play(g, *cops, *robber, cfg);
    CHECK(trace.placement == std::vector<int>{1});
    CHECK(trace.robber_start == 4); // farthest from the cop edge
    CHECK(trace.outcome == Outcome::CopWin);
    CHECK(trace.rounds == 2); // e1 -> e2 -> e3 pins the leaf
}

TEST_CASE("greedy robber runs from the cops, sitting robber stays") {
    const Graph g = cycle_graph(8);
    StaticCops cops({0}); // edge 0-1
    auto robber = make_greedy_robber();
    PlayConfig cfg;
    cfg.max_rounds = 5;
    const auto trace = play(g, cops, *robber, cfg);
    // vertices 4 and 5 are both at distance 3; ties break lexicographically
    CHECK(trace.robber_start == 4);
    CHECK(trace.outcome == Outcome::RobberSurvived);
    for (const auto& mv : trace.moves) {
        if (mv.side == "robber") CHECK(mv.robber_to == 4); // nowhere strictly better
    }

    StaticCops cops2({0});
    auto sitter = make_sitting_robber();
    const auto trace2 = play(g, cops2, *sitter, cfg);
    CHECK(trace2.robber_start == 4);
    for (const auto& mv : trace2.moves) {
        if (mv.side == "robber") CHECK(mv.robber_to == 4);
    }
}

TEST_CASE("matching cops capture any robber within one move") {
    int tested = 0;
    for (const Graph& g : enumerate_graphs_up_to(6, true)) {
        if (g.m() == 0) continue;
        const auto matching = max_matching(g);
        if (!has_near_perfect_matching(g, matching)) continue;
        ++tested;
        for (int v = 0; v < g.n(); ++v) {
            auto cops = make_matching_cops();
            FixedRobber robber(v);
            const auto trace = play(g, *cops, robber);
            CHECK(trace.outcome == Outcome::CopWin);
            CHECK(trace.rounds <= 1);
            CHECK(static_cast<int>(trace.placement.size()) <= g.n());
        }
    }
    CHECK(tested > 50); // the filter must not silently drop everything
}

TEST_CASE("matching cops also beat the greedy robber on seeded graphs") {
    int tested = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = gen_gnp(8, 0.45, 7000 + trial);
        if (!is_connected(g)) continue;
        if (!has_near_perfect_matching(g, max_matching(g))) continue;
        ++tested;
        auto cops = make_matching_cops();
        auto robber = make_greedy_robber();
        const auto trace = play(g, *cops, *robber);
        CHECK(trace.outcome == Outcome::CopWin);
        CHECK(trace.rounds <= 1);
    }
    CHECK(tested >= 10);
}

TEST_CASE("matching cops refuse graphs without a near-perfect matching") {
    auto cops = make_matching_cops();
    Rng rng(1);
    CHECK_THROWS_AS(cops->place(star_graph(3), 0, rng), ValidationError);
    // explicit k must agree with the strategy's own team size
    auto sized = make_matching_cops();
    CHECK_THROWS_AS(sized->place(path_graph(4), 1, rng), ValidationError);
    auto ok = make_matching_cops();
    CHECK(ok->place(path_graph(4), 0, rng).size() == 4);
}

TEST_CASE("density strategy derives its parameters and plans a closing trap") {
    const int n = 400;
    const double p = 10.0 / 399;
    const Graph g = gen_gnp(n, p, 2025);
    REQUIRE(is_connected(g));

    DensityCopConfig cfg;
    cfg.r = 1;
    cfg.C = 15.0;
    DensityCopStrategy cops(cfg);
    auto robber = make_greedy_robber();
    PlayConfig pc;
    pc.max_rounds = 200;

    std::vector<std::vector<int>> cop_snapshots; // after each cop move
    const auto trace = play(g, cops, *robber, pc, [&](const GameState& s) {
        if (s.phase == Phase::Robber) cop_snapshots.push_back(s.cops);
    });

    const auto& der = cops.derived();
    const double d = 2.0 * g.m() / n;
    CHECK(der.d == doctest::Approx(d));
    CHECK(der.q_raw == doctest::Approx(15.0 * d / n));
    CHECK(der.q == doctest::Approx(std::min(1.0, der.q_raw)));
    CHECK(der.rho_in == 1);
    CHECK(der.rho_out == 2);
    CHECK(der.aux == std::min<long long>(static_cast<long long>(2.0 * std::pow(d, 2)),
                                         g.m()));
    CHECK(der.main_cops + der.aux == static_cast<long long>(trace.placement.size()));

    // mirror the documented placement: one Bernoulli(q) draw per edge in
    // ascending order on the play() cop substream, then the auxiliaries on
    // the lowest edge ids
    std::vector<int> pos;
    {
        Rng mirror(mix_seed(kDefaultSeed, 1));
        for (int e = 0; e < g.m(); ++e)
            if (mirror.bernoulli(der.q)) pos.push_back(e);
        CHECK(static_cast<int>(pos.size()) == der.main_cops);
        for (int e = 0; e < der.aux; ++e) pos.push_back(e);
    }
    {
        auto sorted = pos;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == trace.placement);
    }

    const auto& plan = cops.plan();
    REQUIRE(plan.planned);
    REQUIRE(plan.fail.empty());
    CHECK(plan.robber_start == trace.robber_start);

    // ball and trap edges recomputed from scratch
    const auto lay = layers(g, plan.robber_start, 2);
    std::vector<int> ball(lay[0]);
    ball.insert(ball.end(), lay[1].begin(), lay[1].end());
    std::sort(ball.begin(), ball.end());
    CHECK(plan.ball == ball);

    std::vector<char> lvl(g.n(), -1);
    for (int i = 0; i <= 2; ++i)
        for (int w : lay[i]) lvl[w] = static_cast<char>(i);
    std::vector<int> x_edges;
    for (int e = 0; e < g.m(); ++e) {
        const auto [a, b] = g.edge(e);
        if ((lvl[a] == 1 && lvl[b] == 2) || (lvl[a] == 2 && lvl[b] == 1))
            x_edges.push_back(e);
    }
    CHECK(plan.trap_edges == x_edges);
    REQUIRE(!plan.trap_edges.empty());

    std::vector<int> in_ball_edges;
    for (int e = 0; e < g.m(); ++e) {
        const auto [a, b] = g.edge(e);
        if (std::binary_search(ball.begin(), ball.end(), a) &&
            std::binary_search(ball.begin(), ball.end(), b))
            in_ball_edges.push_back(e);
    }
    CHECK(plan.aux_targets == in_ball_edges);

    // routes: distinct cops, legal line-graph walks from the cop's placed
    // edge to its trap edge, timed to land at cop move rho_out
    REQUIRE(plan.routes.size() == plan.trap_edges.size());
    REQUIRE(plan.trap_cops.size() == plan.trap_edges.size());
    std::set<int> assigned(plan.trap_cops.begin(), plan.trap_cops.end());
    CHECK(assigned.size() == plan.trap_cops.size());
    for (std::size_t i = 0; i < plan.routes.size(); ++i) {
        const auto& route = plan.routes[i];
        REQUIRE(route.size() == 3); // rho_out + 1 cop positions
        CHECK(route.front() == pos[plan.trap_cops[i]]);
        CHECK(route.back() == plan.trap_edges[i]);
        for (std::size_t s = 0; s + 1 < route.size(); ++s)
            CHECK(edges_touch(g, route[s], route[s + 1]));
    }

    // trap closed at cop move rho_out and the game was won
    REQUIRE(cop_snapshots.size() >= 2);
    for (int e : plan.trap_edges)
        CHECK(std::binary_search(cop_snapshots[1].begin(), cop_snapshots[1].end(), e));
    CHECK(trace.outcome == Outcome::CopWin);
    CHECK(trace.cop_status.empty());
}

TEST_CASE("density boundary_in mode uses the inner trap and log-density") {
    const int n = 400;
    const Graph g = gen_gnp(n, 10.0 / 399, 2025);
    DensityCopConfig cfg;
    cfg.r = 2;
    cfg.mode = "boundary_in";
    cfg.C = 8.0;
    DensityCopStrategy cops(cfg);
    auto robber = make_greedy_robber();
    PlayConfig pc;
    pc.max_rounds = 200;
    const auto trace = play(g, cops, *robber, pc);
    const auto& der = cops.derived();
    const double d = 2.0 * g.m() / n;
    CHECK(der.q_raw == doctest::Approx(8.0 * std::log(double(n)) / std::pow(d, 2)));
    CHECK(der.rho_in == 1);
    CHECK(der.rho_out == 2);
    if (trace.cop_status.empty()) {
        CHECK(trace.outcome == Outcome::CopWin);
    }
}

TEST_CASE("density failure modes surface through status") {
    const Graph g = gen_gnp(60, 0.15, 31);
    REQUIRE(is_connected(g));
    DensityCopConfig cfg;
    cfg.r = 1;
    cfg.C = 3.0; // enough main cops for the trap itself to be assignable
    cfg.aux_budget = 0; // no auxiliary cops: the ball can never be cleaned up
    DensityCopStrategy cops(cfg);
    auto robber = make_sitting_robber();
    PlayConfig pc;
    pc.max_rounds = 12;
    const auto trace = play(g, cops, *robber, pc);
    CHECK(cops.status() == "trap_failed_auxiliary");
    CHECK(trace.cop_status == "trap_failed_auxiliary");
    // after a failed plan every cop passes forever
    for (const auto& mv : trace.moves) {
        if (mv.side == "cops") CHECK(mv.cop.empty());
    }
}

TEST_CASE("density config validation") {
    CHECK_THROWS_AS(DensityCopStrategy(DensityCopConfig{0, "boundary_out", 1.0, -1, 250}),
                    ValidationError);
    CHECK_THROWS_AS(DensityCopStrategy(DensityCopConfig{1, "sideways", 1.0, -1, 250}),
                    ValidationError);
    CHECK_THROWS_AS(DensityCopStrategy(DensityCopConfig{1, "boundary_out", 0.5, -1, 250}),
                    ValidationError);
    DensityCopStrategy ok(DensityCopConfig{});
    Rng rng(1);
    CHECK_THROWS_AS(ok.place(path_graph(4), 3, rng), ValidationError); // sizes itself
    DensityCopStrategy empty_graph(DensityCopConfig{});
    CHECK_THROWS_AS(empty_graph.place(Graph(4), 0, rng), ValidationError);
}

TEST_CASE("evasion derivation follows the two regimes") {
    const Graph g = gen_gnp(100, 0.1, 9); // only n is used with overrides

    EvasionConfig low;
    low.j = 1;
    low.alpha_override = 0.3;
    low.d_override = 50.0;
    const auto der = derive_evasion(g, low);
    CHECK(der.alpha == doctest::Approx(0.3));
    CHECK(der.c == doctest::Approx(3.0 / (1.0 - 0.6)));
    CHECK(der.t == doctest::Approx(50.0 / (30.0 * der.c * 3.0)));
    CHECK(der.K == static_cast<long long>(std::floor(der.t * der.t)));

    EvasionConfig high;
    high.j = 1;
    high.alpha_override = 0.7; // >= 1/(2j): the second regime
    high.d_override = 50.0;
    const auto der2 = derive_evasion(g, high);
    CHECK(der2.c == doctest::Approx(6.0 / (1.0 - 0.7)));

    EvasionConfig j2;
    j2.j = 2;
    j2.alpha_override = 0.3; // in [1/4, 1/3): second regime for j = 2
    j2.d_override = 50.0;
    CHECK(derive_evasion(g, j2).c == doctest::Approx(6.0 / (1.0 - 3 * 0.3)));

    EvasionConfig bad;
    bad.j = 2;
    bad.alpha_override = 0.5; // >= 1/(2j-1) = 1/3: no regime applies
    bad.d_override = 50.0;
    CHECK_THROWS_AS(derive_evasion(g, bad), ValidationError);
    EvasionConfig sparse;
    sparse.d_override = 0.9; // average degree must exceed 1
    CHECK_THROWS_AS(derive_evasion(g, sparse), ValidationError);
}

TEST_CASE("evasion walks away from the cop and records its reasoning") {
    // C_8 with a single static cop on edge 4 (vertices 4-5); every number
    // below is hand-checked against the danger rules
    const Graph g = cycle_graph(8);
    StaticCops cops({4});
    EvasionRobberStrategy robber(EvasionConfig{});
    PlayConfig pc;
    pc.max_rounds = 6;
    const auto trace = play(g, cops, robber, pc);

    CHECK(trace.robber_start == 0); // distance 3 from the cop edge, lex least
    CHECK(trace.outcome == Outcome::RobberSurvived);

    std::vector<int> robber_path;
    for (const auto& mv : trace.moves)
        if (mv.side == "robber") robber_path.push_back(mv.robber_to);
    // walk 0 -> 1 -> 2, stall at 2 (edge 3-4 is one edge from the cop edge),
    // then backtrack once the deadly-vertex memory expires
    CHECK(robber_path == std::vector<int>{1, 2, 2, 1, 0, 7});
    CHECK(robber.status() == "safety_lost");

    const auto& log = robber.rounds();
    REQUIRE(log.size() == 6);
    CHECK(log[0].vertex == 0);
    CHECK(log[0].deadly == -1);
    CHECK(log[0].safe); // no cops anywhere near the start
    CHECK(log[0].chosen == 1);
    CHECK(log[0].cops == std::vector<int>{4});

    // round 2: the robber came from 1, so 1 is excluded; 2 -> 3 is safe
    CHECK(log[1].vertex == 1);
    CHECK(log[1].deadly == 0);
    CHECK(log[1].chosen == 2);

    // round 3 at vertex 2: neighbour 1 is the deadly vertex, neighbour 3
    // sees the cop edge at edge-distance 2, so the robber passes
    const auto& stuck = log[2];
    CHECK(stuck.vertex == 2);
    CHECK(stuck.deadly == 1);
    CHECK(stuck.chosen == -1);
    REQUIRE(stuck.profiles.size() == 2);
    CHECK(stuck.profiles[0].y == 1);
    CHECK(stuck.profiles[0].excluded_by_deadly);
    CHECK(stuck.profiles[1].y == 3);
    CHECK(stuck.profiles[1].counts == std::vector<long long>{0, 1});
    CHECK(stuck.profiles[1].dangerous == std::vector<char>{0, 0, 1});
    CHECK_FALSE(stuck.profiles[1].excluded_by_deadly);

    // after passing, the deadly memory clears and the robber backtracks
    CHECK(log[3].deadly == -1);
    CHECK(log[3].chosen == 1);

    // danger counts agree with an independent recomputation on every round
    for (const auto& entry : log) {
        for (const auto& prof : entry.profiles) {
            if (prof.y == entry.deadly) continue;
            const auto expect = danger_counts_oracle(g, entry.cops, prof.y,
                                                     entry.vertex, entry.deadly, 2);
            CHECK(prof.counts == expect);
        }
    }
}

TEST_CASE("evasion danger flags match recomputation on a random graph") {
    const Graph g = gen_gnp(60, 0.1, 78);
    REQUIRE(is_connected(g));
    auto cops = make_random_cops();
    EvasionRobberStrategy robber(EvasionConfig{});
    PlayConfig pc;
    pc.k = 6;
    pc.max_rounds = 40;
    play(g, *cops, robber, pc);
    const auto& log = robber.rounds();
    REQUIRE(!log.empty());
    const double t = robber.derived().t;
    for (const auto& entry : log) {
        int first_ok = -1;
        for (const auto& prof : entry.profiles) {
            if (prof.y != entry.deadly) {
                const auto expect = danger_counts_oracle(g, entry.cops, prof.y,
                                                         entry.vertex, entry.deadly, 2);
                CHECK(prof.counts == expect);
                // danger thresholds: t^1/3 for r in {1,2}
                for (int r = 1; r <= 2; ++r) {
                    const bool flag = static_cast<double>(prof.counts[r - 1]) >= t / 3.0;
                    CHECK(static_cast<bool>(prof.dangerous[r]) == flag);
                }
            }
            const bool any = std::find(prof.dangerous.begin(), prof.dangerous.end(),
                                       char(1)) != prof.dangerous.end();
            if (first_ok < 0 && !any && !prof.excluded_by_deadly) first_ok = prof.y;
        }
        CHECK(entry.chosen == first_ok);
    }
}

TEST_CASE("strategy factories build the full roster") {
    CHECK(make_cop_strategy("random_cops")->name() == "random_cops");
    CHECK(make_cop_strategy("greedy_cops")->name() == "greedy_cops");
    CHECK(make_cop_strategy("matching")->name() == "matching");
    CHECK(make_cop_strategy("density")->name() == "density");
    CHECK(make_robber_strategy("greedy_robber")->name() == "greedy_robber");
    CHECK(make_robber_strategy("sitting_robber")->name() == "sitting_robber");
    CHECK(make_robber_strategy("evasion")->name() == "evasion");
    CHECK_THROWS_AS(make_cop_strategy("nonsense"), ValidationError);
    CHECK_THROWS_AS(make_robber_strategy("nonsense"), ValidationError);

    const auto dense = make_cop_strategy(
        "density", nlohmann::json{{"r", 2}, {"mode", "boundary_in"}, {"C", 4.0}});
    CHECK(dense->params().at("r") == 2);
    CHECK(dense->params().at("mode") == "boundary_in");
    const auto ev = make_robber_strategy("evasion", nlohmann::json{{"j", 2}});
    CHECK(ev->params().at("j") == 2);
}
