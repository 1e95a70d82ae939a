#include "containment/domination.hpp"

#include <algorithm>
#include <cstdint>

#include "containment/errors.hpp"

namespace containment {

namespace {

std::vector<std::uint64_t> closed_neighborhoods(const Graph& g) {
    std::vector<std::uint64_t> mask(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t m = 1ULL << v;
        for (auto [w, id] : g.adj(v)) m |= 1ULL << w;
        mask[v] = m;
    }
    return mask;
}

DominationResult greedy_dominating_set(const Graph& g) {
    DominationResult res;
    res.exact = false;
    const int n = g.n();
    std::vector<char> dominated(n, 0);
    int remaining = n;
    while (remaining > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            int gain = dominated[v] ? 0 : 1;
            for (auto [w, id] : g.adj(v))
                if (!dominated[w]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        res.witness.push_back(best);
        if (!dominated[best]) {
            dominated[best] = 1;
            --remaining;
        }
        for (auto [w, id] : g.adj(best)) {
            if (!dominated[w]) {
                dominated[w] = 1;
                --remaining;
            }
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    res.gamma = static_cast<int>(res.witness.size());
    return res;
}

// Can `budget` more vertices dominate everything missing from `covered`?
bool search(const std::vector<std::uint64_t>& nb, std::uint64_t covered,
            std::uint64_t full, int budget, std::vector<int>& chosen) {
    if (covered == full) return true;
    if (budget == 0) return false;
    // branch on the uncovered vertex with the fewest potential dominators
    const int n = static_cast<int>(nb.size());
    int pick = -1, pick_count = n + 1;
    for (int v = 0; v < n; ++v) {
        if (covered & (1ULL << v)) continue;
        int count = 0;
        for (int u = 0; u < n; ++u)
            if (nb[u] & (1ULL << v)) ++count;
        if (count < pick_count) {
            pick_count = count;
            pick = v;
        }
    }
    for (int u = 0; u < n; ++u) {
        if (!(nb[u] & (1ULL << pick))) continue;
        chosen.push_back(u);
        if (search(nb, covered | nb[u], full, budget - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

DominationResult domination_number(const Graph& g, int exact_limit) {
    if (exact_limit > 60) throw ValidationError("domination_number: exact_limit > 60");
    if (g.n() == 0) return {0, true, {}};
    if (g.n() > exact_limit) return greedy_dominating_set(g);

    const auto nb = closed_neighborhoods(g);
    const std::uint64_t full =
        g.n() == 64 ? ~0ULL : ((1ULL << g.n()) - 1);
    const auto upper = greedy_dominating_set(g);
    const int lower = (g.n() + g.max_degree()) / (g.max_degree() + 1);

    for (int k = lower; k < upper.gamma; ++k) {
        std::vector<int> chosen;
        if (search(nb, 0, full, k, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return {k, true, chosen};
        }
    }
    return {upper.gamma, true, upper.witness};
}

} // namespace containment
