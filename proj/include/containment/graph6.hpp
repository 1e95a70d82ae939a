#pragma once

#include <string>
#include <vector>

#include "containment/graph.hpp"

namespace containment {

// Standard graph6 encoding, short form only (n <= 62).
Graph graph6_decode(const std::string& line);
std::string graph6_encode(const Graph& g);

std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

// All non-isomorphic graphs on exactly n vertices (n <= 7), deterministic
// order (ascending canonical adjacency mask). Canonical form = minimum
// adjacency bitmask over all vertex permutations; levels are built by
// augmenting the (n-1)-vertex set with one new vertex, which reaches every
// graph because every graph (every connected graph: every non-cut vertex)
// has a vertex whose removal stays in the previous level.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);
std::vector<Graph> enumerate_graphs_up_to(int n_max, bool connected_only);

} // namespace containment
