#pragma once

#include <vector>

#include "containment/graph.hpp"

namespace containment {

// Distances from source; -1 for unreachable. cap < 0 means no cap; with a
// cap, vertices farther than cap keep -1.
std::vector<int> bfs_dist(const Graph& g, int source, int cap = -1);

// layers[i] = sorted vertices at distance exactly i from v, 0 <= i <= r_max.
// Trailing empty layers are kept so the result always has r_max+1 entries.
std::vector<std::vector<int>> layers(const Graph& g, int v, int r_max);

int eccentricity(const Graph& g, int v); // within v's component

// E_i(v): edges whose nearer endpoint is at distance exactly i-1 from v
// (i.e. edges between layers i-1 and i plus edges inside layer i-1).
// E_1(v) is the set of edges incident to v. i >= 1.
std::vector<int> edge_ball(const Graph& g, int v, int i);

// Number of simple paths from v to w using exactly i edges.
long long count_paths(const Graph& g, int v, int w, int i);

} // namespace containment
