#include "containment/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "containment/errors.hpp"
#include "containment/matching.hpp"
#include "containment/neighborhoods.hpp"

namespace containment {

namespace {

// distance from every vertex to the nearest endpoint of a cop edge
std::vector<int> dist_to_cops(const Graph& g, const std::vector<int>& cops) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int e : cops) {
        auto [u, v] = g.edge(e);
        for (int w : {u, v}) {
            if (dist[w] != 0) {
                dist[w] = 0;
                q.push(w);
            }
        }
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, e] : g.adj(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int edge_dist(const Graph& g, const std::vector<int>& dist, int e) {
    auto [u, v] = g.edge(e);
    const int a = dist[u], b = dist[v];
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

// one line-graph step per cop reducing BFS distance to the robber, ties lex
CopMove chase_move(const Graph& g, const GameState& s) {
    const auto dist = bfs_dist(g, s.robber);
    CopMove move;
    for (int e : s.cops) {
        const int here = edge_dist(g, dist, e);
        if (here <= 0) continue;
        int best = e, best_dist = here;
        for (int f : g.adjacent_edges(e)) {
            const int d = edge_dist(g, dist, f);
            if (d >= 0 && d < best_dist) {
                best_dist = d;
                best = f;
                break; // adjacent_edges is sorted, first strict improvement is lex least
            }
        }
        if (best != e) move.emplace_back(e, best);
    }
    return move;
}

class RandomCops : public CopStrategy {
public:
    std::string name() const override { return "random_cops"; }
    std::vector<int> place(const Graph& g, int k, Rng& rng) override {
        if (k < 1) throw ValidationError("random_cops needs an explicit team size");
        if (g.m() == 0) throw ValidationError("random_cops needs at least one edge");
        std::vector<int> perm(g.m());
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = g.m() - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.next_below(i + 1));
            std::swap(perm[i], perm[j]);
        }
        std::vector<int> placement(k);
        for (int i = 0; i < k; ++i) placement[i] = perm[i % g.m()];
        return placement;
    }
    CopMove move(const Graph& g, const GameState& s, Rng&) override {
        return chase_move(g, s);
    }
};

class GreedyCops : public CopStrategy {
public:
    std::string name() const override { return "greedy_cops"; }
    std::vector<int> place(const Graph& g, int k, Rng&) override {
        if (k < 1) throw ValidationError("greedy_cops needs an explicit team size");
        if (g.m() == 0) throw ValidationError("greedy_cops needs at least one edge");
        std::vector<int> order(g.m());
        std::iota(order.begin(), order.end(), 0);
        const auto weight = [&](int e) {
            auto [u, v] = g.edge(e);
            return g.degree(u) + g.degree(v);
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return weight(a) > weight(b); });
        std::vector<int> placement(k);
        for (int i = 0; i < k; ++i) placement[i] = order[i % g.m()];
        return placement;
    }
    CopMove move(const Graph& g, const GameState& s, Rng&) override {
        return chase_move(g, s);
    }
};

int farthest_vertex(const Graph& g, const std::vector<int>& cops) {
    const auto dist = dist_to_cops(g, cops);
    int best = 0, best_dist = -2;
    for (int v = 0; v < g.n(); ++v) {
        const int d = dist[v] < 0 ? g.n() + 1 : dist[v]; // unreachable is best
        if (d > best_dist) {
            best_dist = d;
            best = v;
        }
    }
    return best;
}

class GreedyRobber : public RobberStrategy {
public:
    std::string name() const override { return "greedy_robber"; }
    int place(const Graph& g, const GameState& s, Rng&) override {
        return farthest_vertex(g, s.cops);
    }
    int move(const Graph& g, const GameState& s, Rng&) override {
        const auto dist = dist_to_cops(g, s.cops);
        const auto value = [&](int v) { return dist[v] < 0 ? g.n() + 1 : dist[v]; };
        int best = s.robber, best_value = value(s.robber);
        for (int v : legal_robber_targets(g, s)) {
            if (value(v) > best_value) {
                best_value = value(v);
                best = v;
                // targets are sorted, the first strict improvement at this
                // value wins ties lexicographically
            }
        }
        return best;
    }
};

class SittingRobber : public RobberStrategy {
public:
    std::string name() const override { return "sitting_robber"; }
    int place(const Graph& g, const GameState& s, Rng&) override {
        return farthest_vertex(g, s.cops);
    }
    int move(const Graph&, const GameState& s, Rng&) override { return s.robber; }
};

class MatchingCops : public CopStrategy {
public:
    std::string name() const override { return "matching"; }
    std::vector<int> place(const Graph& g, int k, Rng&) override {
        if (g.m() == 0) throw ValidationError("matching strategy needs at least one edge");
        const auto matching = max_matching(g);
        std::vector<char> matched(g.n(), 0);
        std::vector<int> placement;
        guard_.assign(g.n(), -1);
        for (int e : matching) {
            auto [u, v] = g.edge(e);
            matched[u] = matched[v] = 1;
            guard_[u] = e;
            guard_[v] = e;
            placement.push_back(e);
            placement.push_back(e);
        }
        int unmatched_covered = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (matched[v] || g.degree(v) == 0) continue;
            if (++unmatched_covered > 1 ||
                2 * static_cast<int>(matching.size()) < g.n() - 1) {
                throw ValidationError("matching strategy needs a perfect or "
                                      "near-perfect matching");
            }
            const int e = g.adj(v).front().second; // lex-first incident edge
            guard_[v] = e;
            placement.push_back(e);
        }
        if (k > 0 && k != static_cast<int>(placement.size()))
            throw ValidationError("matching strategy picks its own team size");
        std::sort(placement.begin(), placement.end());
        return placement;
    }
    CopMove move(const Graph& g, const GameState& s, Rng&) override {
        if (done_) return {};
        done_ = true;
        CopMove move;
        for (auto [u, e] : g.adj(s.robber)) {
            const int target = e;
            if (guard_[u] >= 0 && guard_[u] != target) move.emplace_back(guard_[u], target);
        }
        return move;
    }

private:
    std::vector<int> guard_; // vertex -> edge of the cop associated with it
    bool done_ = false;
};

} // namespace

std::unique_ptr<CopStrategy> make_random_cops() { return std::make_unique<RandomCops>(); }
std::unique_ptr<CopStrategy> make_greedy_cops() { return std::make_unique<GreedyCops>(); }
std::unique_ptr<RobberStrategy> make_greedy_robber() {
    return std::make_unique<GreedyRobber>();
}
std::unique_ptr<RobberStrategy> make_sitting_robber() {
    return std::make_unique<SittingRobber>();
}
std::unique_ptr<CopStrategy> make_matching_cops() {
    return std::make_unique<MatchingCops>();
}

std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& name,
                                               const nlohmann::json& params) {
    if (name == "random_cops") return make_random_cops();
    if (name == "greedy_cops") return make_greedy_cops();
    if (name == "matching") return make_matching_cops();
    if (name == "density") {
        DensityCopConfig cfg;
        if (params.contains("r")) cfg.r = params.at("r").get<int>();
        if (params.contains("mode")) cfg.mode = params.at("mode").get<std::string>();
        if (params.contains("C")) cfg.C = params.at("C").get<double>();
        if (params.contains("aux_budget"))
            cfg.aux_budget = params.at("aux_budget").get<long long>();
        if (params.contains("demand_cap"))
            cfg.demand_cap = params.at("demand_cap").get<int>();
        return std::make_unique<DensityCopStrategy>(cfg);
    }
    throw ValidationError("unknown cop strategy: " + name);
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name,
                                                     const nlohmann::json& params) {
    if (name == "greedy_robber") return make_greedy_robber();
    if (name == "sitting_robber") return make_sitting_robber();
    if (name == "evasion") {
        EvasionConfig cfg;
        if (params.contains("j")) cfg.j = params.at("j").get<int>();
        if (params.contains("alpha")) cfg.alpha_override = params.at("alpha").get<double>();
        if (params.contains("d")) cfg.d_override = params.at("d").get<double>();
        return std::make_unique<EvasionRobberStrategy>(cfg);
    }
    throw ValidationError("unknown robber strategy: " + name);
}

} // namespace containment
