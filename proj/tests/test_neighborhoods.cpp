#include <algorithm>
#include <vector>

#include "doctest.h"

#include "containment/graph.hpp"
#include "containment/neighborhoods.hpp"

using namespace containment;

namespace {

// oracle: Floyd-Warshall distances, written independently of the BFS code
std::vector<std::vector<int>> apsp_oracle(const Graph& g) {
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n(), inf));
    for (int v = 0; v < g.n(); ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < g.n(); ++k)
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = -1;
    return d;
}

// oracle: count simple paths with exactly i edges by explicit DFS
long long count_paths_oracle(const Graph& g, int v, int w, int i,
                             std::vector<char>& used) {
    if (i == 0) return v == w ? 1 : 0;
    long long total = 0;
    used[v] = 1;
    for (auto [x, e] : g.adj(v)) {
        if (!used[x]) total += count_paths_oracle(g, x, w, i - 1, used);
    }
    used[v] = 0;
    return total;
}

long long count_paths_oracle(const Graph& g, int v, int w, int i) {
    std::vector<char> used(g.n(), 0);
    return count_paths_oracle(g, v, w, i, used);
}

} // namespace

TEST_CASE("bfs_dist matches Floyd-Warshall on random graphs") {
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = gen_gnp(14, 0.2 + 0.1 * trial, 300 + trial);
        const auto oracle = apsp_oracle(g);
        for (int v = 0; v < g.n(); ++v) {
            CHECK(bfs_dist(g, v) == oracle[v]);
            const auto capped = bfs_dist(g, v, 2);
            for (int w = 0; w < g.n(); ++w) {
                const int expect = (oracle[v][w] >= 0 && oracle[v][w] <= 2)
                                       ? oracle[v][w]
                                       : -1;
                CHECK(capped[w] == expect);
            }
        }
    }
}

TEST_CASE("layers partition the reachable ball") {
    const Graph g = gen_gnp(20, 0.15, 77);
    const auto dist = bfs_dist(g, 3);
    const auto lay = layers(g, 3, 4);
    REQUIRE(lay.size() == 5);
    for (int i = 0; i <= 4; ++i) {
        std::vector<int> expect;
        for (int w = 0; w < g.n(); ++w)
            if (dist[w] == i) expect.push_back(w);
        CHECK(lay[i] == expect);
    }
    // trailing empties are kept
    const auto far = layers(path_graph(3), 0, 6);
    REQUIRE(far.size() == 7);
    CHECK(far[2] == std::vector<int>{2});
    CHECK(far[6].empty());
}

TEST_CASE("eccentricity on known graphs") {
    CHECK(eccentricity(path_graph(5), 0) == 4);
    CHECK(eccentricity(path_graph(5), 2) == 2);
    CHECK(eccentricity(cycle_graph(6), 1) == 3);
    CHECK(eccentricity(petersen_graph(), 0) == 2);
    // restricted to the vertex's component
    const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(eccentricity(two, 0) == 1);
}

TEST_CASE("edge_ball matches its definition") {
    for (int trial = 0; trial < 4; ++trial) {
        const Graph g = gen_gnp(15, 0.25, 500 + trial);
        for (int v = 0; v < g.n(); v += 3) {
            const auto dist = bfs_dist(g, v);
            for (int i = 1; i <= 3; ++i) {
                std::vector<int> expect;
                for (int e = 0; e < g.m(); ++e) {
                    const auto [a, b] = g.edge(e);
                    const int da = dist[a] < 0 ? 1 << 20 : dist[a];
                    const int db = dist[b] < 0 ? 1 << 20 : dist[b];
                    if (std::min(da, db) == i - 1) expect.push_back(e);
                }
                CHECK(edge_ball(g, v, i) == expect);
            }
        }
    }
    CHECK(edge_ball(star_graph(3), 0, 1) == std::vector<int>{0, 1, 2});
    CHECK(edge_ball(star_graph(3), 0, 2).empty());
}

TEST_CASE("count_paths matches brute-force enumeration") {
    for (int trial = 0; trial < 4; ++trial) {
        const Graph g = gen_gnp(9, 0.4, 900 + trial);
        for (int v = 0; v < g.n(); ++v)
            for (int w = 0; w < g.n(); ++w)
                for (int i = 0; i <= 4; ++i)
                    CHECK(count_paths(g, v, w, i) == count_paths_oracle(g, v, w, i));
    }
    CHECK(count_paths(complete_graph(4), 0, 1, 2) == 2);
    CHECK(count_paths(cycle_graph(6), 0, 3, 3) == 2);
}
