#include <algorithm>
#include <vector>

#include "doctest.h"

#include "containment/domination.hpp"
#include "containment/errors.hpp"
#include "containment/game.hpp"
#include "containment/graph.hpp"
#include "containment/graph6.hpp"
#include "containment/solver.hpp"
#include "containment/strategies.hpp"

using namespace containment;

namespace {

long long binom_ll(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

} // namespace

TEST_CASE("pinned containability numbers") {
    CHECK(containability_number(complete_graph(2)) == 1);
    CHECK(containability_number(path_graph(3)) == 2);
    CHECK(containability_number(path_graph(4)) == 2);
    CHECK(containability_number(cycle_graph(3)) == 2);
    CHECK(containability_number(cycle_graph(4)) == 2);
    CHECK(containability_number(star_graph(1)) == 1);
    CHECK(containability_number(star_graph(2)) == 2);
    CHECK(containability_number(star_graph(3)) == 3);
    CHECK(containability_number(star_graph(4)) == 4);
    CHECK(containability_number(complete_graph(4)) == 3);
}

TEST_CASE("pinned classic cop numbers") {
    CHECK(cop_number(path_graph(5)) == 1);
    CHECK(cop_number(complete_graph(4)) == 1);
    CHECK(cop_number(star_graph(4)) == 1);
    CHECK(cop_number(cycle_graph(3)) == 1);
    CHECK(cop_number(cycle_graph(4)) == 2);
    CHECK(cop_number(cycle_graph(6)) == 2);
    CHECK(cop_number(petersen_graph()) == 3);
}

TEST_CASE("numbers decompose over components as sums") {
    // two disjoint triangles: xi = 2 + 2, c = 1 + 1
    const Graph two_tri = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(containability_number(two_tri) == 4);
    CHECK(cop_number(two_tri) == 2);
    // an isolated vertex adds 0 to xi, 1 to c
    const Graph with_iso = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(containability_number(with_iso) == 2);
    CHECK(cop_number(with_iso) == 2);
    // edgeless graphs: xi = 0, c = n
    CHECK(containability_number(Graph(3)) == 0);
    CHECK(cop_number(Graph(3)) == 3);
}

TEST_CASE("solve_game counts states and finds witnesses") {
    const Graph g = star_graph(3);
    const auto res = solve_game(g, 3, Variant::Containment);
    CHECK(res.cop_win);
    CHECK(res.k == 3);
    CHECK(res.states_total == 2 * binom_ll(3 + 3 - 1, 3) * 4);
    CHECK(res.states_winning > 0);
    CHECK(res.iterations > 0);
    // capture is checked after every cop move while the robber is static, so
    // the stacked placement {0,0,0} wins: a leaf robber is pinned by one cop
    // sliding onto its edge, a center robber by two cops fanning out
    CHECK(res.witness_placement == std::vector<int>{0, 0, 0});
    const auto j = res.to_json();
    CHECK(j.at("value") == "CopWin");
    CHECK(j.at("k") == 3);

    const auto lose = solve_game(g, 2, Variant::Containment);
    CHECK_FALSE(lose.cop_win);
    CHECK(lose.witness_placement.empty());
}

TEST_CASE("containment solving requires an edge") {
    CHECK_THROWS_AS(solve_game(Graph(2), 1, Variant::Containment), ValidationError);
    CHECK_THROWS_AS(solve_game(path_graph(2), 0, Variant::Containment),
                    ValidationError);
}

TEST_CASE("state budget is enforced before allocation") {
    const Graph g = complete_graph(7); // m = 21
    SolveOptions tiny;
    tiny.state_budget = 1000;
    CHECK_THROWS_AS(solve_game(g, 4, Variant::Containment, tiny), ResourceError);
    CHECK_THROWS_AS(containability_number(g, tiny), ResourceError);
}

TEST_CASE("retrograde solver agrees with the minimax oracle") {
    // independent algorithms: BFS from terminal states vs depth-first
    // search with a path-repetition cutoff
    OracleOptions oopt;
    for (const Graph& g : enumerate_graphs(4, true)) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(cops_win_containment(g, k) ==
                  minimax_cops_win(g, k, Variant::Containment, oopt));
            CHECK(cops_win_classic(g, k) ==
                  minimax_cops_win(g, k, Variant::Classic, oopt));
        }
    }
    for (const Graph& g : enumerate_graphs(5, true)) {
        for (int k = 1; k <= 2; ++k) {
            CHECK(cops_win_containment(g, k) ==
                  minimax_cops_win(g, k, Variant::Containment, oopt));
            CHECK(cops_win_classic(g, k) ==
                  minimax_cops_win(g, k, Variant::Classic, oopt));
        }
    }
}

TEST_CASE("oracle respects its own limits") {
    OracleOptions small;
    small.max_n = 4;
    CHECK_THROWS_AS(minimax_cops_win(path_graph(5), 1, Variant::Classic, small),
                    ResourceError);
    small.max_n = 7;
    small.max_k = 1;
    CHECK_THROWS_AS(minimax_cops_win(path_graph(5), 2, Variant::Classic, small),
                    ResourceError);
    OracleOptions starved;
    starved.node_budget = 10;
    CHECK_THROWS_AS(
        minimax_cops_win(cycle_graph(6), 2, Variant::Containment, starved),
        ResourceError);
}

TEST_CASE("solved table replays to a capture inside the state bound") {
    for (const Graph& g : {path_graph(4), cycle_graph(4), star_graph(3)}) {
        const int k = containability_number(g);
        auto table = solve_table(g, k, Variant::Containment);
        REQUIRE(table->cop_win());
        // the table must beat every robber start within its own win depth
        for (int start = 0; start < g.n(); ++start) {
            GameState s;
            s.cops = table->witness();
            s.robber = start;
            s.phase = Phase::Cops;
            int steps = 0;
            while (!is_capture(g, s) && steps < 4 * g.n()) {
                REQUIRE(table->state_winning(s.cops, s.robber, true));
                apply_cop_move(g, s, table->best_cop_move(s.cops, s.robber));
                ++steps;
                if (is_capture(g, s)) break;
                // adversarial robber: stay winning for the cops regardless
                // of the reply, so probe the worst legal target
                int worst = s.robber;
                for (int t : legal_robber_targets(g, s)) worst = t; // last = greatest
                apply_robber_move(g, s, worst);
            }
            CHECK(is_capture(g, s));
        }
    }
}

TEST_CASE("table cop strategy wins through the engine") {
    const Graph g = cycle_graph(5);
    const int k = containability_number(g);
    auto table = solve_table(g, k, Variant::Containment);
    auto cops = make_table_cop_strategy(table);
    auto robber = make_greedy_robber();
    PlayConfig cfg;
    cfg.k = k;
    const auto trace = play(g, *cops, *robber, cfg);
    CHECK(trace.outcome == Outcome::CopWin);

    auto sitting = make_sitting_robber();
    auto cops2 = make_table_cop_strategy(table);
    const auto trace2 = play(g, *cops2, *sitting, cfg);
    CHECK(trace2.outcome == Outcome::CopWin);
}

TEST_CASE("numbers_report assembles the full record") {
    const Graph g = star_graph(3);
    const auto rep = numbers_report(g);
    CHECK(rep.n == 4);
    CHECK(rep.m == 3);
    CHECK(rep.xi == 3);
    CHECK(rep.cop == 1);
    CHECK(rep.gamma == 1);
    CHECK(rep.max_degree == 3);
    CHECK(rep.gamma_exact);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.chain_ok);      // 1 <= 3 <= 1 * 3
    CHECK(rep.conjecture_ok); // 3 <= 1 * 3
    CHECK(rep.xi_witness == std::vector<int>{0, 0, 0});
    CHECK(rep.gamma_witness == std::vector<int>{0});
    const auto j = rep.to_json();
    CHECK(j.at("xi") == 3);
    CHECK(j.at("chain_ok") == true);

    const auto degen = numbers_report(Graph(2));
    CHECK(degen.degenerate);
    CHECK(degen.xi == 0);
    CHECK(degen.cop == 2);
}

TEST_CASE("chain holds on every connected graph up to n=5") {
    for (const Graph& g : enumerate_graphs_up_to(5, true)) {
        if (g.m() == 0) continue;
        const auto rep = numbers_report(g);
        CHECK_FALSE(rep.degenerate);
        CHECK(rep.cop <= rep.xi);
        CHECK(rep.xi <= rep.gamma * rep.max_degree);
        CHECK(rep.xi >= 1);
        CHECK(rep.chain_ok);
    }
}

TEST_CASE("witness placement is the lexicographic minimum") {
    // P_4 edges 0:0-1 1:1-2 2:2-3; two cops on {0,1} pin vertex 1; check
    // no winning placement precedes the reported one
    const Graph g = path_graph(4);
    const auto res = solve_game(g, 2, Variant::Containment);
    REQUIRE(res.cop_win);
    auto table = solve_table(g, 2, Variant::Containment);
    std::vector<std::vector<int>> all;
    for (int a = 0; a < g.m(); ++a)
        for (int b = a; b < g.m(); ++b) all.push_back({a, b});
    std::vector<int> first;
    for (const auto& team : all) {
        bool wins = true;
        for (int v = 0; v < g.n() && wins; ++v) {
            if (is_capture(g, team, v)) continue;
            wins = table->state_winning(team, v, true);
        }
        if (wins) {
            first = team;
            break;
        }
    }
    CHECK(res.witness_placement == first);
}
