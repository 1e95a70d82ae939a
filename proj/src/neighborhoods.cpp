#include "containment/neighborhoods.hpp"

#include <algorithm>
#include <deque>

#include "containment/errors.hpp"

namespace containment {

std::vector<int> bfs_dist(const Graph& g, int source, int cap) {
    if (source < 0 || source >= g.n()) throw ValidationError("bfs: source out of range");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (cap >= 0 && dist[v] >= cap) continue;
        for (auto [w, id] : g.adj(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> layers(const Graph& g, int v, int r_max) {
    if (r_max < 0) throw ValidationError("layers: r_max must be >= 0");
    const auto dist = bfs_dist(g, v, r_max);
    std::vector<std::vector<int>> out(r_max + 1);
    for (int u = 0; u < g.n(); ++u) {
        if (dist[u] >= 0 && dist[u] <= r_max) out[dist[u]].push_back(u);
    }
    return out; // vertex scan order is ascending, so each layer is sorted
}

int eccentricity(const Graph& g, int v) {
    const auto dist = bfs_dist(g, v);
    int ecc = 0;
    for (int u = 0; u < g.n(); ++u) ecc = std::max(ecc, dist[u]);
    return ecc;
}

std::vector<int> edge_ball(const Graph& g, int v, int i) {
    if (i < 1) throw ValidationError("edge_ball: i must be >= 1");
    const auto dist = bfs_dist(g, v, i);
    std::vector<int> out;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        if (dist[a] < 0 || dist[b] < 0) continue;
        if (std::min(dist[a], dist[b]) == i - 1) out.push_back(e);
    }
    return out;
}

namespace {

long long count_paths_rec(const Graph& g, int u, int w, int left,
                          const std::vector<int>& dist_w, std::vector<char>& used) {
    if (left == 0) return u == w ? 1 : 0;
    if (dist_w[u] < 0 || dist_w[u] > left) return 0;
    long long total = 0;
    used[u] = 1;
    for (auto [x, id] : g.adj(u)) {
        if (!used[x]) total += count_paths_rec(g, x, w, left - 1, dist_w, used);
    }
    used[u] = 0;
    return total;
}

} // namespace

long long count_paths(const Graph& g, int v, int w, int i) {
    if (v < 0 || w < 0 || v >= g.n() || w >= g.n())
        throw ValidationError("count_paths: vertex out of range");
    if (i < 0) throw ValidationError("count_paths: i must be >= 0");
    if (i == 0) return v == w ? 1 : 0;
    if (v == w) return 0; // simple paths of positive length cannot return
    const auto dist_w = bfs_dist(g, w);
    std::vector<char> used(g.n(), 0);
    return count_paths_rec(g, v, w, i, dist_w, used);
}

} // namespace containment
