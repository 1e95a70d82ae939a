#include "containment/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "containment/errors.hpp"

namespace containment {

std::vector<int> max_matching(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n());
    const bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (!ok) throw std::logic_error("max_matching: matching verification failed");

    std::vector<int> out;
    const auto null_vertex = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] != null_vertex && v < static_cast<int>(mate[v])) {
            out.push_back(g.edge_between(v, static_cast<int>(mate[v])));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_near_perfect_matching(const Graph& g, const std::vector<int>& matching) {
    return 2 * static_cast<int>(matching.size()) >= g.n() - 1;
}

namespace {

bool try_kuhn(int u, const std::vector<std::vector<int>>& adj_left,
              std::vector<int>& left_to_right, std::vector<int>& right_to_left,
              std::vector<char>& visited) {
    for (int r : adj_left[u]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (right_to_left[r] < 0 ||
            try_kuhn(right_to_left[r], adj_left, left_to_right, right_to_left, visited)) {
            left_to_right[u] = r;
            right_to_left[r] = u;
            return true;
        }
    }
    return false;
}

} // namespace

int bipartite_match(int n_left, int n_right,
                    const std::vector<std::vector<int>>& adj_left,
                    std::vector<int>& left_to_right) {
    if (static_cast<int>(adj_left.size()) != n_left)
        throw ValidationError("bipartite_match: adjacency size mismatch");
    left_to_right.assign(n_left, -1);
    std::vector<int> right_to_left(n_right, -1);
    int matched = 0;
    for (int u = 0; u < n_left; ++u) {
        std::vector<char> visited(n_right, 0);
        if (try_kuhn(u, adj_left, left_to_right, right_to_left, visited)) ++matched;
    }
    return matched;
}

} // namespace containment
