#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "containment/rng.hpp"

namespace containment {

// Simple undirected graph. Vertices are 0..n-1; edges get ids 0..m-1 in
// insertion order and are stored with u < v. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    // Validates and normalizes an edge list; throws ValidationError on
    // loops, duplicates or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    // adj(v) is sorted by neighbor; .first = neighbor, .second = edge id.
    const std::vector<std::pair<int, int>>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    // Edge id between u and v, or -1.
    int edge_between(int u, int v) const;

    // Edge ids sharing an endpoint with e, sorted, e excluded.
    std::vector<int> adjacent_edges(int e) const;

    // Edge ids incident to v, sorted.
    std::vector<int> incident_edges(int v) const;

private:
    friend Graph gen_gnp(int n, double p, std::uint64_t seed);

    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// ---- constructions used all over the tests ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves); // K_{1,s}, center = 0
Graph petersen_graph();

// G(n,p): one Bernoulli(p) draw per pair in lexicographic order (u < v),
// so a given (n, p, seed) names one graph on every platform.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// ---- stats / connectivity ----

struct GraphStats {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool connected = false;
    std::vector<int> degree_histogram; // index = degree
};

GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g); // sorted vertex lists

// Induced subgraph; vertices must be sorted. Vertex i of the result is
// vertices[i]; edge ids are renumbered.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// ---- edge-list text format ----
// First line "n m", then one "u v" per line, 0-based.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace containment
