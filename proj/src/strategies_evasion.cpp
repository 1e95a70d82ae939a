#include "containment/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "containment/errors.hpp"

namespace containment {

EvasionDerived derive_evasion(const Graph& g, const EvasionConfig& cfg) {
    if (cfg.j < 1) throw ValidationError("evasion: j must be >= 1");
    EvasionDerived der;
    der.d = cfg.d_override > 0 ? cfg.d_override : 2.0 * g.m() / std::max(1, g.n());
    if (der.d <= 1.0) throw ValidationError("evasion: average degree must exceed 1");
    der.alpha = cfg.alpha_override > 0
                    ? cfg.alpha_override
                    : std::log(der.d) / std::log(static_cast<double>(g.n()));
    if (der.alpha <= 0.0 || der.alpha >= 1.0)
        throw ValidationError("evasion: alpha must lie in (0,1)");
    const int j = cfg.j;
    if (der.alpha < 1.0 / (2 * j)) {
        der.c = 3.0 / (1.0 - 2 * j * der.alpha);
    } else if (der.alpha < 1.0 / (2 * j - 1)) {
        der.c = 6.0 / (1.0 - (2 * j - 1) * der.alpha);
    } else {
        throw ValidationError("evasion: alpha too large for this j");
    }
    der.t = der.d / (30.0 * der.c * (2 * j + 1));
    if (der.t <= 0.0) throw ValidationError("evasion: threshold not positive");
    der.K = static_cast<long long>(std::floor(std::pow(der.t, j + 1)));
    return der;
}

namespace {

// BFS distances from src with some vertices removed; -1 unreachable/removed
std::vector<int> bfs_without(const Graph& g, int src, std::initializer_list<int> removed,
                             int cap) {
    std::vector<int> dist(g.n(), -1);
    for (int r : removed) {
        if (r == src) return dist;
    }
    std::vector<char> banned(g.n(), 0);
    for (int r : removed) {
        if (r >= 0) banned[r] = 1;
    }
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        if (dist[v] == cap) continue;
        for (auto [w, e] : g.adj(v)) {
            if (!banned[w] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

} // namespace

struct EvasionRobberStrategy::Impl {
    EvasionConfig cfg;
    EvasionDerived der;
    bool placed = false;
    bool safety_lost = false;
    int prev = -1; // deadly neighbour: the vertex left in the previous round
    std::vector<EvasionRoundLog> log;

    // exists a neighbour x of v with C^x_1(v) <= t and
    // C^x_{2i}(v), C^x_{2i+1}(v) <= t^(i+1) for i = 1..j-1, counts in G minus x
    bool safe_predicate(const Graph& g, const std::vector<int>& cops, int v) const {
        const int j = cfg.j;
        const int max_r = std::max(1, 2 * j - 1);
        for (auto [x, ex] : g.adj(v)) {
            const auto dist = bfs_without(g, v, {x}, std::max(0, max_r - 1));
            std::vector<long long> count(max_r + 1, 0);
            for (int ce : cops) {
                auto [a, b] = g.edge(ce);
                if (a == x || b == x) continue;
                int dmin = -1;
                for (int w : {a, b}) {
                    if (dist[w] >= 0 && (dmin < 0 || dist[w] < dmin)) dmin = dist[w];
                }
                if (dmin >= 0 && dmin + 1 <= max_r) ++count[dmin + 1];
            }
            bool ok = count[1] <= der.t;
            for (int i = 1; ok && i <= j - 1; ++i) {
                const double bound = std::pow(der.t, i + 1);
                ok = count[2 * i] <= bound && count[2 * i + 1] <= bound;
            }
            if (ok) return true;
        }
        return false;
    }
};

EvasionRobberStrategy::EvasionRobberStrategy(EvasionConfig cfg) : impl_(new Impl) {
    impl_->cfg = cfg;
}

EvasionRobberStrategy::~EvasionRobberStrategy() = default;

nlohmann::json EvasionRobberStrategy::params() const {
    nlohmann::json p{{"j", impl_->cfg.j},
                     {"alpha_override", impl_->cfg.alpha_override},
                     {"d_override", impl_->cfg.d_override}};
    if (impl_->placed) {
        p["d"] = impl_->der.d;
        p["alpha"] = impl_->der.alpha;
        p["c"] = impl_->der.c;
        p["t"] = impl_->der.t;
    }
    return p;
}

std::string EvasionRobberStrategy::status() const {
    return impl_->safety_lost ? "safety_lost" : "";
}

const EvasionDerived& EvasionRobberStrategy::derived() const { return impl_->der; }
const std::vector<EvasionRoundLog>& EvasionRobberStrategy::rounds() const {
    return impl_->log;
}

int EvasionRobberStrategy::place(const Graph& g, const GameState& s, Rng&) {
    impl_->der = derive_evasion(g, impl_->cfg);
    impl_->placed = true;
    impl_->prev = -1;
    // start as far from the nearest cop edge as possible, ties lexicographic
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int e : s.cops) {
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
    int best = 0, best_dist = -2;
    for (int v = 0; v < g.n(); ++v) {
        const int d = dist[v] < 0 ? g.n() + 1 : dist[v];
        if (d > best_dist) {
            best_dist = d;
            best = v;
        }
    }
    return best;
}

int EvasionRobberStrategy::move(const Graph& g, const GameState& s, Rng&) {
    auto& I = *impl_;
    const int v = s.robber;
    const int j = I.cfg.j;
    EvasionRoundLog entry;
    entry.round = s.round;
    entry.vertex = v;
    entry.deadly = I.prev;
    entry.cops = s.cops;
    entry.safe = I.safe_predicate(g, s.cops, v);

    std::vector<int> from_deadly;
    if (I.prev >= 0) from_deadly = bfs_without(g, I.prev, {v}, 2 * j);

    int chosen = -1;
    for (auto [y, ey] : g.adj(v)) {
        DangerProfile prof;
        prof.y = y;
        prof.counts.assign(2 * j, 0);
        prof.dangerous.assign(2 * j + 1, 0);
        prof.dangerous[0] = std::binary_search(s.cops.begin(), s.cops.end(), ey) ? 1 : 0;
        if (y != I.prev) {
            // cop counts per edge distance from y in G minus {v, prev}
            const auto dist = bfs_without(g, y, {v, I.prev}, 2 * j - 1);
            for (int ce : s.cops) {
                auto [a, b] = g.edge(ce);
                if (a == v || b == v || a == I.prev || b == I.prev) continue;
                int dmin = -1;
                for (int w : {a, b}) {
                    if (dist[w] >= 0 && (dmin < 0 || dist[w] < dmin)) dmin = dist[w];
                }
                if (dmin >= 0 && dmin + 1 <= 2 * j) ++prof.counts[dmin];
            }
            for (int r = 1; r <= 2 * j; ++r) {
                const int tier = (r + 1) / 2;
                const double threshold = std::pow(I.der.t, tier) / 3.0;
                if (static_cast<double>(prof.counts[r - 1]) >= threshold)
                    prof.dangerous[r] = 1;
            }
        }
        prof.excluded_by_deadly =
            I.prev >= 0 && from_deadly[y] >= 0 && from_deadly[y] <= 2 * j;
        const bool any_danger =
            std::find(prof.dangerous.begin(), prof.dangerous.end(), 1) !=
            prof.dangerous.end();
        if (chosen < 0 && !any_danger && !prof.excluded_by_deadly) chosen = y;
        entry.profiles.push_back(std::move(prof));
    }
    entry.chosen = chosen;
    I.log.push_back(std::move(entry));

    if (chosen < 0) {
        I.safety_lost = true;
        I.prev = -1; // a passing robber did not come from anywhere
        return v;
    }
    I.prev = v;
    return chosen;
}

} // namespace containment
