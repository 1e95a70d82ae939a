#include "containment/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "containment/errors.hpp"

namespace containment {

void Graph::add_edge_unchecked(int u, int v) {
    if (u > v) std::swap(u, v);
    const int id = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    adj_[u].emplace_back(v, id);
    adj_[v].emplace_back(u, id);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ValidationError("graph: negative vertex count");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ValidationError("graph: endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
        }
        if (u == v) throw ValidationError("graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw ValidationError("graph: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
        }
        g.add_edge_unchecked(u, v);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_between(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(v, -1));
    if (it != list.end() && it->first == v) return it->second;
    return -1;
}

std::vector<int> Graph::adjacent_edges(int e) const {
    auto [u, v] = edges_[e];
    std::vector<int> out;
    out.reserve(adj_[u].size() + adj_[v].size() - 2);
    for (auto [w, id] : adj_[u])
        if (id != e) out.push_back(id);
    for (auto [w, id] : adj_[v])
        if (id != e) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    out.reserve(adj_[v].size());
    for (auto [w, id] : adj_[v]) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer 5-cycle
        e.emplace_back(i, i + 5);               // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw ValidationError("gen_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("gen_gnp: p must be in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) g.add_edge_unchecked(u, v);
        }
    }
    // add_edge_unchecked appends in lexicographic pair order, which keeps
    // each adjacency list already sorted by neighbor.
    return g;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.m = g.m();
    s.max_degree = g.max_degree();
    s.min_degree = g.n() == 0 ? 0 : g.degree(0);
    s.degree_histogram.assign(s.max_degree + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        ++s.degree_histogram[g.degree(v)];
    }
    s.connected = is_connected(g);
    return s;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (auto [w, id] : g.adj(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n();
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    int next = 0;
    for (int start = 0; start < g.n(); ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.adj(v)) {
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<int>> out(next);
    for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    }
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ValidationError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ValidationError("edge list: negative header values");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw ValidationError("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

} // namespace containment
