#include "containment/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>

#include "containment/domination.hpp"
#include "containment/errors.hpp"

namespace containment {

namespace {

struct PositionModel {
    int P = 0;                             // cop position count
    std::vector<std::vector<int>> options; // per position, sorted, self included
};

PositionModel build_model(const Graph& g, Variant variant) {
    PositionModel m;
    if (variant == Variant::Containment) {
        if (g.m() == 0) throw ValidationError("containment game needs at least one edge");
        m.P = g.m();
        m.options.resize(m.P);
        for (int e = 0; e < m.P; ++e) {
            auto opts = g.adjacent_edges(e);
            opts.insert(std::lower_bound(opts.begin(), opts.end(), e), e);
            m.options[e] = std::move(opts);
        }
    } else {
        m.P = g.n();
        m.options.resize(m.P);
        for (int v = 0; v < m.P; ++v) {
            std::vector<int> opts{v};
            for (auto [w, id] : g.adj(v)) opts.push_back(w);
            std::sort(opts.begin(), opts.end());
            m.options[v] = std::move(opts);
        }
    }
    return m;
}

// The solver splits a cop round into single-cop steps: a state is
// (U, M, r) with U the multiset of cops still to move this round and M
// the multiset of cops already moved. To keep the split canonical, a cop
// may only move to a target >= max(M), i.e. rounds are replayed with
// targets in ascending order; every full-round multiset transition is
// reachable exactly this way. u = |U| = k means the cops' turn starts,
// u = 0 means the robber moves against the full multiset M.
class TableImpl : public SolvedTable {
public:
    TableImpl(const Graph& g, int k, Variant variant, const SolveOptions& opt)
        : g_(g), k_(k), variant_(variant) {
        if (k_ < 1) throw ValidationError("solve: k must be >= 1");
        model_ = build_model(g_, variant_);
        check_budget(opt);
        build_tables();
        run();
        evaluate();
    }

    bool cop_win() const override { return cop_win_; }
    const std::vector<int>& witness() const override { return witness_; }

    SolveResult result() const override {
        SolveResult res;
        res.k = k_;
        res.cop_win = cop_win_;
        res.states_total = 2 * mset_[k_] * g_.n();
        res.states_winning = states_winning_;
        res.iterations = pops_;
        res.witness_placement = witness_;
        return res;
    }

    bool state_winning(const std::vector<int>& cops, int robber,
                       bool cops_to_move) const override {
        const long long rank = ms_rank(cops.data(), k_);
        const long long id = cops_to_move ? base_[k_] + rank * g_.n() + robber
                                          : base_[0] + rank * g_.n() + robber;
        return win_[id] != 0;
    }

    CopMove best_cop_move(const std::vector<int>& cops, int robber) const override;

private:
    long long binom(int a, int b) const {
        if (b < 0 || b > bcols_ - 1 || a < 0) return 0;
        return static_cast<long long>(binom_[static_cast<std::size_t>(a) * bcols_ + b]);
    }

    // colex rank of a sorted multiset over [0, P)
    long long ms_rank(const int* x, int j) const {
        long long r = 0;
        for (int i = 0; i < j; ++i) r += binom(x[i] + i, i + 1);
        return r;
    }

    void ms_unrank(long long rank, int j, int* out) const {
        for (int i = j; i >= 1; --i) {
            int lo = i - 1, hi = model_.P + i - 1;
            while (lo < hi) {
                const int mid = (lo + hi + 1) / 2;
                if (binom(mid, i) <= rank) lo = mid;
                else hi = mid - 1;
            }
            out[i - 1] = lo - (i - 1);
            rank -= binom(lo, i);
        }
    }

    long long rank_with_insert(const int* x, int j, int extra) const {
        int tmp[kMaxCops + 1];
        int i = 0;
        while (i < j && x[i] <= extra) {
            tmp[i] = x[i];
            ++i;
        }
        tmp[i] = extra;
        for (; i < j; ++i) tmp[i + 1] = x[i];
        return ms_rank(tmp, j + 1);
    }

    void check_budget(const SolveOptions& opt) {
        const auto mset_est = [&](int j) {
            double r = 1.0;
            for (int i = 0; i < j; ++i) r = r * (model_.P + i) / (i + 1);
            return r;
        };
        const double budget = static_cast<double>(opt.state_budget);
        const double full = 2.0 * mset_est(k_) * g_.n();
        if (full > budget) {
            throw ResourceError("state budget exceeded: ~" + std::to_string(full) +
                                " game states, budget " + std::to_string(opt.state_budget));
        }
        double internal = 0.0;
        for (int u = 0; u <= k_; ++u) internal += mset_est(u) * mset_est(k_ - u) * g_.n();
        if (internal > budget) {
            throw ResourceError("state budget exceeded: ~" + std::to_string(internal) +
                                " expanded states, budget " + std::to_string(opt.state_budget));
        }
        if (k_ > kMaxCops) throw ResourceError("solve: k > " + std::to_string(kMaxCops));
    }

    void build_tables() {
        const int P = model_.P;
        brows_ = P + k_ + 1;
        bcols_ = k_ + 2;
        binom_.assign(static_cast<std::size_t>(brows_) * bcols_, 0);
        for (int a = 0; a < brows_; ++a) {
            binom_[static_cast<std::size_t>(a) * bcols_] = 1;
            for (int b = 1; b < bcols_ && b <= a; ++b) {
                binom_[static_cast<std::size_t>(a) * bcols_ + b] =
                    binom_[static_cast<std::size_t>(a - 1) * bcols_ + b - 1] +
                    (b <= a - 1 ? binom_[static_cast<std::size_t>(a - 1) * bcols_ + b] : 0);
            }
        }
        mset_.resize(k_ + 1);
        for (int j = 0; j <= k_; ++j) mset_[j] = binom(P + j - 1, j);
        base_.resize(k_ + 2);
        base_[0] = 0;
        for (int u = 0; u <= k_; ++u)
            base_[u + 1] = base_[u] + mset_[u] * mset_[k_ - u] * g_.n();
        total_ = base_[k_ + 1];
        win_.assign(total_, 0);
        depth_.assign(total_, 0);
        counter_.assign(static_cast<std::size_t>(mset_[k_]) * g_.n(), 0);
    }

    void init_block(const std::vector<int>& M, std::vector<char>& occupied) {
        const long long rm = ms_rank(M.data(), k_);
        for (int e : M) occupied[e] = 1;
        for (int r = 0; r < g_.n(); ++r) {
            bool capture;
            int outdeg = 1; // pass
            if (variant_ == Variant::Containment) {
                capture = true;
                for (auto [w, e] : g_.adj(r)) {
                    if (!occupied[e]) {
                        capture = false;
                        ++outdeg;
                    }
                }
            } else {
                capture = occupied[r] != 0;
                outdeg += g_.degree(r);
            }
            const long long id = base_[0] + rm * g_.n() + r;
            if (capture) {
                win_[id] = 1;
                queue_.push_back(static_cast<std::uint32_t>(id));
            } else {
                counter_[rm * g_.n() + r] = static_cast<std::uint16_t>(outdeg);
            }
        }
        for (int e : M) occupied[e] = 0;
    }

    void run() {
        const int n = g_.n();
        std::vector<int> M(k_);
        std::vector<char> occupied(model_.P, 0);
        std::function<void(int, int)> gen = [&](int idx, int lo) {
            if (idx == k_) {
                init_block(M, occupied);
                return;
            }
            for (int v = lo; v < model_.P; ++v) {
                M[idx] = v;
                gen(idx + 1, v);
            }
        };
        gen(0, 0);

        std::vector<int> U(k_ + 1), Mv(k_ + 1);
        std::size_t head = 0;
        while (head < queue_.size()) {
            const long long id = queue_[head++];
            ++pops_;
            int u = 0;
            while (id >= base_[u + 1]) ++u;
            const long long local = id - base_[u];
            const int r = static_cast<int>(local % n);
            const long long rest = local / n;
            const long long rank_m = rest % mset_[k_ - u];
            const long long rank_u = rest / mset_[k_ - u];

            if (u < k_) {
                // cop-turn predecessors: un-move the cop that moved last
                ms_unrank(rank_u, u, U.data());
                ms_unrank(rank_m, k_ - u, Mv.data());
                const int t = Mv[k_ - u - 1]; // max of M moved last
                const long long rank_m2 = rank_m - binom(t + (k_ - u - 1), k_ - u);
                for (int src : model_.options[t]) {
                    const long long rank_u2 = rank_with_insert(U.data(), u, src);
                    const long long pred =
                        base_[u + 1] + (rank_u2 * mset_[k_ - u - 1] + rank_m2) * n + r;
                    if (!win_[pred]) {
                        win_[pred] = 1;
                        depth_[pred] = depth_[id] + 1;
                        queue_.push_back(static_cast<std::uint32_t>(pred));
                    }
                }
            } else {
                // robber-turn predecessors: where could she have moved from?
                ms_unrank(rank_u, k_, U.data());
                const auto relax = [&](int r_from) {
                    const long long pred = base_[0] + rank_u * n + r_from;
                    if (win_[pred]) return;
                    if (--counter_[rank_u * n + r_from] == 0) {
                        win_[pred] = 1;
                        depth_[pred] = depth_[id] + 1;
                        queue_.push_back(static_cast<std::uint32_t>(pred));
                    }
                };
                relax(r); // pass
                if (variant_ == Variant::Containment) {
                    for (auto [w, e] : g_.adj(r)) {
                        if (!std::binary_search(U.begin(), U.begin() + k_, e)) relax(w);
                    }
                } else {
                    for (auto [w, e] : g_.adj(r)) relax(w);
                }
            }
        }
    }

    void evaluate() {
        const int n = g_.n();
        for (long long i = 0; i < mset_[k_] * n; ++i) {
            states_winning_ += win_[base_[0] + i];
            states_winning_ += win_[base_[k_] + i];
        }
        // lexicographically least winning placement
        std::vector<int> C(k_);
        bool found = false;
        std::function<void(int, int)> gen = [&](int idx, int lo) {
            if (found) return;
            if (idx == k_) {
                const long long rank = ms_rank(C.data(), k_);
                for (int r = 0; r < n; ++r) {
                    if (!win_[base_[k_] + rank * n + r]) return;
                }
                found = true;
                witness_ = C;
                return;
            }
            for (int v = lo; v < model_.P && !found; ++v) {
                C[idx] = v;
                gen(idx + 1, v);
            }
        };
        gen(0, 0);
        cop_win_ = found;
    }

    static constexpr int kMaxCops = 32;

    Graph g_;
    int k_;
    Variant variant_;
    PositionModel model_;
    int brows_ = 0, bcols_ = 0;
    std::vector<unsigned long long> binom_;
    std::vector<long long> mset_;
    std::vector<long long> base_;
    long long total_ = 0;
    std::vector<std::uint8_t> win_;
    std::vector<std::int32_t> depth_;
    std::vector<std::uint16_t> counter_;
    std::vector<std::uint32_t> queue_;
    long long pops_ = 0;
    long long states_winning_ = 0;
    bool cop_win_ = false;
    std::vector<int> witness_;
};

CopMove TableImpl::best_cop_move(const std::vector<int>& cops, int robber) const {
    if (static_cast<int>(cops.size()) != k_)
        throw ValidationError("best_cop_move: wrong team size");
    std::vector<int> U = cops; // sorted
    std::vector<int> M;
    CopMove move;
    for (int u = k_; u >= 1; --u) {
        long long best_depth = LLONG_MAX;
        int best_src = -1, best_t = -1;
        long long best_id = -1;
        for (std::size_t i = 0; i < U.size(); ++i) {
            if (i > 0 && U[i] == U[i - 1]) continue;
            const int src = U[i];
            std::vector<int> U2 = U;
            U2.erase(U2.begin() + i);
            const long long rank_u2 = ms_rank(U2.data(), u - 1);
            for (int t : model_.options[src]) {
                if (!M.empty() && t < M.back()) continue;
                std::vector<int> M2 = M;
                M2.push_back(t);
                const long long rank_m2 = ms_rank(M2.data(), static_cast<int>(M2.size()));
                const long long id =
                    base_[u - 1] +
                    (rank_u2 * mset_[k_ - u + 1] + rank_m2) * g_.n() + robber;
                if (!win_[id]) continue;
                if (depth_[id] < best_depth) {
                    best_depth = depth_[id];
                    best_src = src;
                    best_t = t;
                    best_id = id;
                }
            }
        }
        if (best_src < 0)
            throw ValidationError("best_cop_move: state is not cop-winning");
        (void)best_id;
        if (best_src != best_t) move.emplace_back(best_src, best_t);
        U.erase(std::find(U.begin(), U.end(), best_src));
        M.insert(std::upper_bound(M.begin(), M.end(), best_t), best_t);
    }
    return move;
}

} // namespace

nlohmann::json SolveResult::to_json() const {
    return nlohmann::json{{"k", k},
                          {"value", cop_win ? "CopWin" : "RobberWin"},
                          {"states_total", states_total},
                          {"states_winning", states_winning},
                          {"iterations", iterations},
                          {"witness", witness_placement}};
}

std::shared_ptr<SolvedTable> solve_table(const Graph& g, int k, Variant variant,
                                         const SolveOptions& opt) {
    return std::make_shared<TableImpl>(g, k, variant, opt);
}

SolveResult solve_game(const Graph& g, int k, Variant variant, const SolveOptions& opt) {
    return TableImpl(g, k, variant, opt).result();
}

bool cops_win_containment(const Graph& g, int k, const SolveOptions& opt) {
    return solve_game(g, k, Variant::Containment, opt).cop_win;
}

bool cops_win_classic(const Graph& g, int k, const SolveOptions& opt) {
    return solve_game(g, k, Variant::Classic, opt).cop_win;
}

namespace {

struct ComponentView {
    Graph graph;
    std::vector<int> edge_to_global;
};

ComponentView component_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    ComponentView view;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (index[u] >= 0 && index[v] >= 0) {
            edges.emplace_back(index[u], index[v]);
            view.edge_to_global.push_back(e);
        }
    }
    view.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
    return view;
}

// smallest winning k for one component, with the witness mapped out
int component_number(const ComponentView& view, Variant variant, const SolveOptions& opt,
                     std::vector<int>* witness_out) {
    const int cap = variant == Variant::Containment ? view.graph.m() : view.graph.n();
    for (int k = 1; k <= cap; ++k) {
        const auto res = solve_game(view.graph, k, variant, opt);
        if (res.cop_win) {
            if (witness_out) {
                for (int p : res.witness_placement) {
                    witness_out->push_back(variant == Variant::Containment
                                               ? view.edge_to_global[p]
                                               : p);
                }
            }
            return k;
        }
    }
    throw std::logic_error("component_number: no winning k up to the trivial cap");
}

} // namespace

int containability_number(const Graph& g, const SolveOptions& opt) {
    int total = 0;
    for (const auto& comp : components(g)) {
        const auto view = component_subgraph(g, comp);
        if (view.graph.m() == 0) continue; // vacuous capture
        total += component_number(view, Variant::Containment, opt, nullptr);
    }
    return total;
}

int cop_number(const Graph& g, const SolveOptions& opt) {
    int total = 0;
    for (const auto& comp : components(g)) {
        const auto view = component_subgraph(g, comp);
        total += component_number(view, Variant::Classic, opt, nullptr);
    }
    return total;
}

// ---- minimax oracle ----

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// independent check on the production solver: forward value iteration from
// below over the fully enumerated state space (sorted cop multiset, robber
// vertex, side to move). capture states start as cop wins, everything else as
// a robber win, and states flip to cop wins until a fixed point, so a win
// here means the cops force capture in finitely many moves. deliberately a
// different algorithm from the solver's backward retrograde worklist.
class MinimaxOracle {
public:
    MinimaxOracle(const Graph& g, int k, Variant variant, const OracleOptions& opt)
        : g_(g), k_(k), variant_(variant), opt_(opt) {
        if (g.n() > opt.max_n)
            throw ResourceError("oracle: n exceeds max_n = " + std::to_string(opt.max_n));
        if (k > opt.max_k)
            throw ResourceError("oracle: k exceeds max_k = " + std::to_string(opt.max_k));
        if (variant == Variant::Containment && g.m() == 0)
            throw ValidationError("containment game needs at least one edge");
        position_count_ = variant == Variant::Containment ? g.m() : g.n();
    }

    bool cops_win() {
        build();
        iterate();
        for (std::size_t c = 0; c < multisets_.size(); ++c) {
            bool all = true;
            for (int r = 0; r < g_.n() && all; ++r) all = win_[index(c, r, 0)] != 0;
            if (all) return true;
        }
        return false;
    }

private:
    std::size_t index(std::size_t c, int r, int side) const {
        return (c * static_cast<std::size_t>(g_.n()) + static_cast<std::size_t>(r)) * 2 +
               static_cast<std::size_t>(side);
    }

    void charge(long long amount) {
        nodes_ += amount;
        if (nodes_ > opt_.node_budget) throw ResourceError("oracle: node budget exceeded");
    }

    bool capture(const std::vector<int>& cops, int robber) const {
        if (variant_ == Variant::Containment) return is_capture(g_, cops, robber);
        return std::binary_search(cops.begin(), cops.end(), robber);
    }

    std::vector<std::vector<int>> cop_successors(const std::vector<int>& cops) const {
        if (variant_ == Variant::Containment) return cop_successor_multisets(g_, cops);
        // classic: per-cop vertex options, deduplicated across permutations
        std::set<std::vector<int>> dedup;
        std::vector<int> current;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == cops.size()) {
                auto key = current;
                std::sort(key.begin(), key.end());
                dedup.insert(std::move(key));
                return;
            }
            current.push_back(cops[i]);
            rec(i + 1);
            current.pop_back();
            for (auto [w, e] : g_.adj(cops[i])) {
                current.push_back(w);
                rec(i + 1);
                current.pop_back();
            }
        };
        rec(0);
        return {dedup.begin(), dedup.end()};
    }

    std::vector<int> robber_targets(const std::vector<int>& cops, int robber) const {
        if (variant_ == Variant::Containment) {
            GameState s;
            s.cops = cops;
            s.robber = robber;
            s.phase = Phase::Robber;
            return legal_robber_targets(g_, s);
        }
        std::vector<int> out{robber};
        for (auto [w, e] : g_.adj(robber)) out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    }

    void build() {
        std::vector<int> cur(static_cast<std::size_t>(k_));
        std::function<void(int, int)> gen = [&](int idx, int lo) {
            if (idx == k_) {
                multisets_.push_back(cur);
                return;
            }
            for (int p = lo; p < position_count_; ++p) {
                cur[static_cast<std::size_t>(idx)] = p;
                gen(idx + 1, p);
            }
        };
        gen(0, 0);
        std::unordered_map<std::vector<int>, std::size_t, VecHash> rank;
        rank.reserve(multisets_.size() * 2);
        for (std::size_t c = 0; c < multisets_.size(); ++c) rank.emplace(multisets_[c], c);

        const int n = g_.n();
        win_.assign(multisets_.size() * static_cast<std::size_t>(n) * 2, 0);
        cop_succ_.resize(multisets_.size());
        robber_succ_.resize(multisets_.size() * static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < multisets_.size(); ++c) {
            charge(2LL * n); // two sides per robber vertex
            for (const auto& next : cop_successors(multisets_[c]))
                cop_succ_[c].push_back(rank.at(next));
            for (int r = 0; r < n; ++r) {
                if (capture(multisets_[c], r)) {
                    win_[index(c, r, 0)] = 1; // capture holds whoever moves next
                    win_[index(c, r, 1)] = 1;
                    continue;
                }
                robber_succ_[c * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)] =
                    robber_targets(multisets_[c], r);
            }
        }
    }

    void iterate() {
        const int n = g_.n();
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < multisets_.size(); ++c) {
                for (int r = 0; r < n; ++r) {
                    charge(2);
                    const std::size_t s0 = index(c, r, 0);
                    if (!win_[s0]) {
                        for (std::size_t c2 : cop_succ_[c]) {
                            if (win_[index(c2, r, 1)]) {
                                win_[s0] = 1;
                                changed = true;
                                break;
                            }
                        }
                    }
                    const std::size_t s1 = index(c, r, 1);
                    if (!win_[s1]) {
                        bool all = true;
                        for (int r2 : robber_succ_[c * static_cast<std::size_t>(n) +
                                                   static_cast<std::size_t>(r)]) {
                            if (!win_[index(c, r2, 0)]) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            win_[s1] = 1;
                            changed = true;
                        }
                    }
                }
            }
        }
    }

    const Graph& g_;
    int k_;
    Variant variant_;
    OracleOptions opt_;
    int position_count_;
    long long nodes_ = 0;
    std::vector<std::vector<int>> multisets_;
    std::vector<char> win_;
    std::vector<std::vector<std::size_t>> cop_succ_;
    std::vector<std::vector<int>> robber_succ_;
};

} // namespace

bool minimax_cops_win(const Graph& g, int k, Variant variant, const OracleOptions& opt) {
    return MinimaxOracle(g, k, variant, opt).cops_win();
}

nlohmann::json NumbersReport::to_json() const {
    return nlohmann::json{{"n", n},
                          {"m", m},
                          {"xi", xi},
                          {"cop_number", cop},
                          {"gamma", gamma},
                          {"gamma_exact", gamma_exact},
                          {"max_degree", max_degree},
                          {"degenerate", degenerate},
                          {"chain_ok", chain_ok},
                          {"conjecture_ok", conjecture_ok},
                          {"gamma_witness", gamma_witness},
                          {"xi_witness", xi_witness}};
}

NumbersReport numbers_report(const Graph& g, const SolveOptions& opt) {
    NumbersReport rep;
    rep.n = g.n();
    rep.m = g.m();
    rep.max_degree = g.max_degree();

    const auto dom = domination_number(g);
    rep.gamma = dom.gamma;
    rep.gamma_exact = dom.exact;
    rep.gamma_witness = dom.witness;

    bool any_isolated = false;
    for (const auto& comp : components(g)) {
        const auto view = component_subgraph(g, comp);
        if (view.graph.m() == 0) {
            any_isolated = true;
        } else {
            rep.xi += component_number(view, Variant::Containment, opt, &rep.xi_witness);
        }
        rep.cop += component_number(view, Variant::Classic, opt, nullptr);
    }
    std::sort(rep.xi_witness.begin(), rep.xi_witness.end());

    rep.degenerate = g.m() == 0 || any_isolated;
    if (!rep.degenerate) {
        rep.chain_ok = rep.cop <= rep.xi && rep.xi <= rep.gamma * rep.max_degree;
        rep.conjecture_ok = rep.xi <= rep.cop * rep.max_degree;
    }
    return rep;
}

namespace {

class TableCopStrategy : public CopStrategy {
public:
    explicit TableCopStrategy(std::shared_ptr<SolvedTable> table) : table_(std::move(table)) {}
    std::string name() const override { return "solver_table"; }
    std::vector<int> place(const Graph&, int, Rng&) override { return table_->witness(); }
    CopMove move(const Graph&, const GameState& s, Rng&) override {
        return table_->best_cop_move(s.cops, s.robber);
    }

private:
    std::shared_ptr<SolvedTable> table_;
};

} // namespace

std::unique_ptr<CopStrategy> make_table_cop_strategy(std::shared_ptr<SolvedTable> table) {
    return std::make_unique<TableCopStrategy>(std::move(table));
}

} // namespace containment
