#include "containment/game.hpp"

#include <algorithm>
#include <set>

#include "containment/errors.hpp"

namespace containment {

bool is_capture(const Graph& g, const std::vector<int>& cops, int robber) {
    // every incident edge occupied; vacuously true on an isolated vertex
    for (auto [w, e] : g.adj(robber)) {
        if (!std::binary_search(cops.begin(), cops.end(), e)) return false;
    }
    return true;
}

bool is_capture(const Graph& g, const GameState& s) {
    return s.robber >= 0 && is_capture(g, s.cops, s.robber);
}

namespace {

// options for one cop: its edge plus all edges sharing an endpoint
std::vector<int> cop_options(const Graph& g, int e) {
    auto out = g.adjacent_edges(e);
    out.insert(std::lower_bound(out.begin(), out.end(), e), e);
    return out;
}

void multiset_choices(const std::vector<int>& options, int count, int from,
                      std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (count == 0) {
        emit(current);
        return;
    }
    for (std::size_t i = from; i < options.size(); ++i) {
        current.push_back(options[i]);
        multiset_choices(options, count - 1, static_cast<int>(i), current, emit);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> cop_successor_multisets(const Graph& g,
                                                      const std::vector<int>& cops) {
    // group stacked cops so permutations of identical cops are not re-enumerated
    std::vector<std::pair<int, int>> groups; // (edge, count)
    for (int e : cops) {
        if (!groups.empty() && groups.back().first == e) ++groups.back().second;
        else groups.emplace_back(e, 1);
    }

    std::set<std::vector<int>> dedup;
    std::vector<int> assembled;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            std::vector<int> key = assembled;
            std::sort(key.begin(), key.end());
            dedup.insert(std::move(key));
            return;
        }
        const auto options = cop_options(g, groups[gi].first);
        std::vector<int> current;
        multiset_choices(options, groups[gi].second, 0, current,
                         [&](const std::vector<int>& choice) {
                             const std::size_t before = assembled.size();
                             assembled.insert(assembled.end(), choice.begin(), choice.end());
                             rec(gi + 1);
                             assembled.resize(before);
                         });
    };
    rec(0);
    return std::vector<std::vector<int>>(dedup.begin(), dedup.end());
}

std::vector<int> legal_robber_targets(const Graph& g, const GameState& s) {
    std::vector<int> out{s.robber};
    for (auto [w, e] : g.adj(s.robber)) {
        if (!std::binary_search(s.cops.begin(), s.cops.end(), e)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void apply_cop_move(const Graph& g, GameState& s, const CopMove& move) {
    if (s.phase != Phase::Cops) throw ValidationError("apply_cop_move: not the cops' turn");
    std::vector<int> next = s.cops;
    for (auto [from, to] : move) {
        auto it = std::find(next.begin(), next.end(), from);
        if (it == next.end()) {
            throw ValidationError("illegal cop move: no cop on edge " + std::to_string(from) +
                                  " (round " + std::to_string(s.round) + ")");
        }
        if (from != to) {
            auto [u, v] = g.edge(from);
            auto [x, y] = g.edge(to);
            if (u != x && u != y && v != x && v != y) {
                throw ValidationError("illegal cop move: edges " + std::to_string(from) +
                                      " and " + std::to_string(to) + " share no endpoint");
            }
        }
        next.erase(it);
    }
    for (auto [from, to] : move) next.push_back(to);
    std::sort(next.begin(), next.end());
    s.cops = std::move(next);
    s.phase = Phase::Robber;
}

void apply_robber_move(const Graph& g, GameState& s, int target) {
    if (s.phase != Phase::Robber) throw ValidationError("apply_robber_move: not the robber's turn");
    if (target != s.robber) {
        const int e = g.edge_between(s.robber, target);
        if (e < 0) {
            throw ValidationError("illegal robber move: " + std::to_string(s.robber) +
                                  " -> " + std::to_string(target) + " is not an edge");
        }
        if (std::binary_search(s.cops.begin(), s.cops.end(), e)) {
            throw ValidationError("illegal robber move: edge " + std::to_string(e) +
                                  " is occupied by a cop");
        }
    }
    s.robber = target;
    s.phase = Phase::Cops;
}

nlohmann::json StrategyTrace::to_json() const {
    nlohmann::json moves_json = nlohmann::json::array();
    for (const auto& mv : moves) {
        nlohmann::json detail;
        if (mv.side == "cops") {
            detail = nlohmann::json::array();
            for (auto [from, to] : mv.cop) detail.push_back({from, to});
        } else {
            detail = nlohmann::json{{"to", mv.robber_to}};
        }
        moves_json.push_back({{"side", mv.side}, {"detail", detail}});
    }
    return nlohmann::json{{"placement", placement},
                          {"robber_start", robber_start},
                          {"moves", moves_json},
                          {"outcome", outcome_name(outcome)},
                          {"rounds", rounds}};
}

StrategyTrace trace_from_json(const nlohmann::json& j) {
    StrategyTrace t;
    t.placement = j.at("placement").get<std::vector<int>>();
    t.robber_start = j.at("robber_start").get<int>();
    for (const auto& mv : j.at("moves")) {
        TraceMove out;
        out.side = mv.at("side").get<std::string>();
        if (out.side == "cops") {
            for (const auto& pair : mv.at("detail"))
                out.cop.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        } else {
            out.robber_to = mv.at("detail").at("to").get<int>();
        }
        t.moves.push_back(std::move(out));
    }
    t.outcome = j.at("outcome").get<std::string>() == "CopWin" ? Outcome::CopWin
                                                               : Outcome::RobberSurvived;
    t.rounds = j.at("rounds").get<int>();
    return t;
}

StrategyTrace play(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                   const PlayConfig& cfg, const PlayObserver& observer) {
    if (g.n() < 1) throw ValidationError("play: empty graph");
    Rng cop_rng(mix_seed(cfg.seed, 1));
    Rng robber_rng(mix_seed(cfg.seed, 2));

    StrategyTrace trace;
    GameState s;

    auto placement = cops.place(g, cfg.k, cop_rng);
    if (placement.empty()) throw ValidationError("play: empty cop placement");
    if (cfg.k > 0 && static_cast<int>(placement.size()) != cfg.k) {
        throw ValidationError("play: strategy placed " + std::to_string(placement.size()) +
                              " cops, expected " + std::to_string(cfg.k));
    }
    for (int e : placement) {
        if (e < 0 || e >= g.m())
            throw ValidationError("play: placement edge out of range: " + std::to_string(e));
    }
    std::sort(placement.begin(), placement.end());
    s.cops = placement;
    s.phase = Phase::RobberPlacement;
    trace.placement = placement;

    const int start = robber.place(g, s, robber_rng);
    if (start < 0 || start >= g.n())
        throw ValidationError("play: robber start out of range: " + std::to_string(start));
    s.robber = start;
    s.phase = Phase::Cops;
    trace.robber_start = start;

    const int max_rounds = cfg.max_rounds > 0 ? cfg.max_rounds : 4 * g.n();
    trace.outcome = Outcome::RobberSurvived;
    trace.rounds = max_rounds;

    if (is_capture(g, s)) {
        trace.outcome = Outcome::CopWin;
        trace.rounds = 0;
    } else {
        for (int round = 1; round <= max_rounds; ++round) {
            s.round = round;
            CopMove mv = cops.move(g, s, cop_rng);
            std::sort(mv.begin(), mv.end());
            apply_cop_move(g, s, mv);
            trace.moves.push_back({"cops", mv, -1});
            if (observer) observer(s);
            if (is_capture(g, s)) {
                trace.outcome = Outcome::CopWin;
                trace.rounds = round;
                break;
            }
            const int target = robber.move(g, s, robber_rng);
            apply_robber_move(g, s, target);
            trace.moves.push_back({"robber", {}, target});
            if (observer) observer(s);
        }
    }

    trace.cop_status = cops.status();
    trace.robber_status = robber.status();
    return trace;
}

} // namespace containment
