#include <vector>

#include "doctest.h"

#include "containment/domination.hpp"
#include "containment/graph.hpp"
#include "containment/graph6.hpp"

using namespace containment;

namespace {

// oracle: smallest dominating set by exhaustive subset scan, n <= 20
int domination_oracle(const Graph& g) {
    const int n = g.n();
    std::vector<unsigned> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (auto [w, e] : g.adj(v)) closed[v] |= 1u << w;
    }
    const unsigned full = n == 32 ? ~0u : (1u << n) - 1;
    int best = n;
    for (unsigned s = 0; s < (1u << n); ++s) {
        unsigned covered = 0;
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) {
                covered |= closed[v];
                ++size;
            }
        if (covered == full && size < best) best = size;
    }
    return best;
}

bool dominates(const Graph& g, const std::vector<int>& set) {
    std::vector<char> covered(g.n(), 0);
    for (int v : set) {
        covered[v] = 1;
        for (auto [w, e] : g.adj(v)) covered[w] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) return false;
    return true;
}

} // namespace

TEST_CASE("exact gamma matches brute force on all graphs up to n=6") {
    for (const Graph& g : enumerate_graphs_up_to(6, false)) {
        const auto res = domination_number(g);
        CHECK(res.exact);
        CHECK(res.gamma == domination_oracle(g));
        CHECK(static_cast<int>(res.witness.size()) == res.gamma);
        CHECK(dominates(g, res.witness));
    }
}

TEST_CASE("exact gamma on seeded random graphs n=10") {
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = gen_gnp(10, 0.2 + 0.07 * trial, 60 + trial);
        const auto res = domination_number(g);
        CHECK(res.exact);
        CHECK(res.gamma == domination_oracle(g));
        CHECK(dominates(g, res.witness));
    }
}

TEST_CASE("pinned values") {
    CHECK(domination_number(path_graph(6)).gamma == 2);
    CHECK(domination_number(cycle_graph(7)).gamma == 3);
    CHECK(domination_number(star_graph(5)).gamma == 1);
    CHECK(domination_number(complete_graph(8)).gamma == 1);
    CHECK(domination_number(petersen_graph()).gamma == 3);
    CHECK(domination_number(Graph(3)).gamma == 3); // isolated vertices
    CHECK(domination_number(Graph(0)).gamma == 0);
}

TEST_CASE("greedy fallback is a valid upper bound") {
    const Graph g = gen_gnp(14, 0.3, 123);
    const auto greedy = domination_number(g, /*exact_limit=*/4);
    CHECK_FALSE(greedy.exact);
    CHECK(dominates(g, greedy.witness));
    CHECK(greedy.gamma >= domination_oracle(g));
    CHECK(greedy.gamma == static_cast<int>(greedy.witness.size()));
}
