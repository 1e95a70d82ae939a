#pragma once

#include <vector>

#include "containment/graph.hpp"

namespace containment {

// Maximum matching of a general graph, returned as sorted edge ids.
// Backed by the blossom implementation in Boost.Graph (checked variant,
// which verifies maximality internally).
std::vector<int> max_matching(const Graph& g);

// 2*|M| >= n-1, i.e. at most one vertex unmatched.
bool has_near_perfect_matching(const Graph& g, const std::vector<int>& matching);

// Maximum bipartite matching (Kuhn). adj_left[i] lists right vertices
// available to left vertex i. Returns matched count; left_to_right[i] is
// the partner or -1.
int bipartite_match(int n_left, int n_right,
                    const std::vector<std::vector<int>>& adj_left,
                    std::vector<int>& left_to_right);

} // namespace containment
