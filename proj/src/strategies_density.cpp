#include "containment/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

#include "containment/errors.hpp"
#include "containment/matching.hpp"
#include "containment/neighborhoods.hpp"

namespace containment {

struct DensityCopStrategy::Impl {
    DensityCopConfig cfg;
    DensityDerived der;
    DensityPlanInfo plan;
    bool placed = false;
    std::vector<int> pos;                   // cop index -> placement edge
    int main_count = 0;                     // cops [0, main_count) are the random team
    std::vector<std::vector<int>> schedule; // cop index -> positions at cop move 0,1,...
    int moves_made = 0;

    void make_plan(const Graph& g, int robber);
};

DensityCopStrategy::DensityCopStrategy(DensityCopConfig cfg) : impl_(new Impl) {
    if (cfg.r < 1) throw ValidationError("density: r must be >= 1");
    if (cfg.C < 1.0) throw ValidationError("density: C must be >= 1");
    if (cfg.mode != "boundary_out" && cfg.mode != "boundary_in")
        throw ValidationError("density: mode must be boundary_out or boundary_in");
    impl_->cfg = std::move(cfg);
}

DensityCopStrategy::~DensityCopStrategy() = default;

nlohmann::json DensityCopStrategy::params() const {
    return nlohmann::json{{"r", impl_->cfg.r},
                          {"mode", impl_->cfg.mode},
                          {"C", impl_->cfg.C},
                          {"aux_budget", impl_->cfg.aux_budget},
                          {"demand_cap", impl_->cfg.demand_cap}};
}

const DensityDerived& DensityCopStrategy::derived() const { return impl_->der; }
const DensityPlanInfo& DensityCopStrategy::plan() const { return impl_->plan; }

std::string DensityCopStrategy::status() const { return impl_->plan.fail; }

std::vector<int> DensityCopStrategy::place(const Graph& g, int k, Rng& rng) {
    if (k > 0) throw ValidationError("density strategy picks its own team size");
    if (g.m() == 0) throw ValidationError("density strategy needs at least one edge");
    auto& I = *impl_;
    const auto& cfg = I.cfg;
    I.der.d = 2.0 * g.m() / g.n();
    if (cfg.mode == "boundary_out") {
        I.der.rho_in = cfg.r;
        I.der.q_raw = cfg.C * std::pow(I.der.d, cfg.r) / g.n();
    } else {
        I.der.rho_in = cfg.r - 1;
        I.der.q_raw = cfg.C * std::log(static_cast<double>(g.n())) / std::pow(I.der.d, cfg.r);
    }
    I.der.rho_out = I.der.rho_in + 1;
    I.der.q = std::min(1.0, std::max(0.0, I.der.q_raw));

    I.pos.clear();
    for (int e = 0; e < g.m(); ++e) {
        if (rng.bernoulli(I.der.q)) I.pos.push_back(e);
    }
    I.main_count = static_cast<int>(I.pos.size());
    I.der.main_cops = I.main_count;

    long long aux = cfg.aux_budget;
    if (aux < 0) aux = static_cast<long long>(2.0 * std::pow(I.der.d, cfg.r + 1));
    aux = std::min<long long>(aux, g.m());
    I.der.aux = aux;
    for (long long e = 0; e < aux; ++e) I.pos.push_back(static_cast<int>(e));

    I.placed = true;
    return I.pos;
}

void DensityCopStrategy::Impl::make_plan(const Graph& g, int robber) {
    plan.planned = true;
    plan.robber_start = robber;
    const int rho_in = der.rho_in, rho_out = der.rho_out;

    const auto lay = layers(g, robber, rho_out);
    std::vector<int> lvl(g.n(), -1);
    for (int i = 0; i <= rho_out; ++i) {
        for (int w : lay[i]) lvl[w] = i;
    }
    for (int i = 0; i <= rho_in; ++i)
        plan.ball.insert(plan.ball.end(), lay[i].begin(), lay[i].end());
    std::sort(plan.ball.begin(), plan.ball.end());

    // X: the trap edges between the two outermost layers, with the outer
    // endpoint recorded as the boundary vertex
    std::vector<int> boundary_of; // parallel to plan.trap_edges
    for (int u : lay[rho_out]) {
        for (auto [w, e] : g.adj(u)) {
            if (lvl[w] == rho_in) {
                plan.trap_edges.push_back(e);
                boundary_of.push_back(u);
            }
        }
    }
    {
        std::vector<int> order(plan.trap_edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return plan.trap_edges[a] < plan.trap_edges[b];
        });
        std::vector<int> xs, bs;
        for (int i : order) {
            xs.push_back(plan.trap_edges[i]);
            bs.push_back(boundary_of[i]);
        }
        plan.trap_edges = std::move(xs);
        boundary_of = std::move(bs);
    }

    if (cfg.mode == "boundary_in") {
        // the analysis only promises a bounded back-degree; give up loudly
        // when this placement exceeds it
        std::vector<int> demand(g.n(), 0);
        for (int u : boundary_of) {
            if (++demand[u] > cfg.demand_cap) {
                plan.fail = "trap_failed";
                return;
            }
        }
    }

    // main cops by edge
    std::vector<std::vector<int>> cops_on(g.m());
    for (int i = 0; i < main_count; ++i) cops_on[pos[i]].push_back(i);

    // per boundary vertex: depth-limited BFS in the line graph from the
    // edges at u, keeping parents for route reconstruction
    std::vector<int> bverts = boundary_of;
    std::sort(bverts.begin(), bverts.end());
    bverts.erase(std::unique(bverts.begin(), bverts.end()), bverts.end());
    std::vector<std::unordered_map<int, int>> parent_of(bverts.size()); // edge -> parent edge
    const auto bindex = [&](int u) {
        return static_cast<int>(std::lower_bound(bverts.begin(), bverts.end(), u) -
                                bverts.begin());
    };
    std::vector<std::vector<int>> eligible(plan.trap_edges.size());
    {
        for (std::size_t bi = 0; bi < bverts.size(); ++bi) {
            auto& parent = parent_of[bi];
            std::unordered_map<int, int> dist;
            std::queue<int> q;
            for (auto [w, e] : g.adj(bverts[bi])) {
                parent.emplace(e, -1);
                dist.emplace(e, 0);
                q.push(e);
            }
            std::vector<int> reached;
            while (!q.empty()) {
                const int e = q.front();
                q.pop();
                reached.push_back(e);
                const int de = dist[e];
                if (de == rho_out - 1) continue;
                for (int f : g.adjacent_edges(e)) {
                    if (dist.emplace(f, de + 1).second) {
                        parent.emplace(f, e);
                        q.push(f);
                    }
                }
            }
            for (std::size_t xi = 0; xi < plan.trap_edges.size(); ++xi) {
                if (boundary_of[xi] != bverts[bi]) continue;
                for (int e : reached) {
                    for (int cop : cops_on[e]) eligible[xi].push_back(cop);
                }
            }
        }
    }

    std::vector<int> assigned;
    const int matched = bipartite_match(static_cast<int>(plan.trap_edges.size()),
                                        main_count, eligible, assigned);
    if (matched < static_cast<int>(plan.trap_edges.size())) {
        plan.fail = "trap_failed";
        return;
    }
    plan.trap_cops = assigned;

    // trap routes: walk the BFS parents back to an edge at u, then step
    // onto the trap edge; pad the front so every cop arrives at move rho_out
    plan.routes.resize(plan.trap_edges.size());
    for (std::size_t xi = 0; xi < plan.trap_edges.size(); ++xi) {
        const int x = plan.trap_edges[xi];
        const auto& parent = parent_of[bindex(boundary_of[xi])];
        std::vector<int> route{pos[assigned[xi]]};
        while (parent.at(route.back()) != -1) route.push_back(parent.at(route.back()));
        if (route.back() != x) route.push_back(x);
        const std::size_t pad =
            static_cast<std::size_t>(rho_out) + 1 - route.size(); // route fits by construction
        std::vector<int> padded(pad, route.front());
        padded.insert(padded.end(), route.begin(), route.end());
        plan.routes[xi] = padded;
        schedule[assigned[xi]] = std::move(padded);
    }

    // auxiliary cops: one per edge inside the ball, walking in after the
    // trap closes
    std::vector<char> in_ball(g.n(), 0);
    for (int w : plan.ball) in_ball[w] = 1;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_ball[u] && in_ball[v]) plan.aux_targets.push_back(e);
    }
    const long long aux_count = der.aux;
    if (static_cast<long long>(plan.aux_targets.size()) > aux_count) {
        plan.fail = "trap_failed_auxiliary";
        return;
    }
    for (std::size_t i = 0; i < plan.aux_targets.size(); ++i) {
        const int cop = main_count + static_cast<int>(i);
        const int from = pos[cop];
        const int target = plan.aux_targets[i];
        std::vector<int> walk{from};
        if (from != target) {
            auto [c, dd] = g.edge(target);
            std::vector<int> dist(g.n(), -1);
            std::queue<int> q;
            dist[c] = 0;
            dist[dd] = 0;
            q.push(c);
            q.push(dd);
            while (!q.empty()) {
                const int w = q.front();
                q.pop();
                for (auto [w2, e2] : g.adj(w)) {
                    if (dist[w2] < 0) {
                        dist[w2] = dist[w] + 1;
                        q.push(w2);
                    }
                }
            }
            auto [a, b] = g.edge(from);
            if (dist[a] < 0 && dist[b] < 0) {
                plan.fail = "trap_failed_auxiliary"; // unreachable target
                return;
            }
            int at = (dist[b] < 0 || (dist[a] >= 0 && dist[a] <= dist[b])) ? a : b;
            while (dist[at] > 0) {
                for (auto [w2, e2] : g.adj(at)) {
                    if (dist[w2] == dist[at] - 1) {
                        walk.push_back(e2);
                        at = w2;
                        break;
                    }
                }
            }
            if (walk.back() != target) walk.push_back(target);
        }
        std::vector<int> padded(rho_out, from);
        padded.insert(padded.end(), walk.begin(), walk.end());
        schedule[cop] = std::move(padded);
    }
}

CopMove DensityCopStrategy::move(const Graph& g, const GameState& s, Rng&) {
    auto& I = *impl_;
    if (!I.placed) throw ValidationError("density: move before place");
    if (!I.plan.planned) {
        I.schedule.assign(I.pos.size(), {});
        I.make_plan(g, s.robber);
        if (!I.plan.fail.empty()) I.schedule.assign(I.pos.size(), {});
    }
    CopMove move;
    const int t = I.moves_made;
    for (std::size_t i = 0; i < I.schedule.size(); ++i) {
        const auto& sched = I.schedule[i];
        if (static_cast<int>(sched.size()) > t + 1 && sched[t] != sched[t + 1])
            move.emplace_back(sched[t], sched[t + 1]);
    }
    ++I.moves_made;
    return move;
}

} // namespace containment
