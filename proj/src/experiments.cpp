#include "containment/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "containment/domination.hpp"
#include "containment/errors.hpp"
#include "containment/graph6.hpp"
#include "containment/strategies.hpp"

namespace containment {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

std::string fmt_rate(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

double recompute_alpha(int n, double p) {
    const double np = n * p;
    if (np <= 0 || n <= 1) return 0;
    return std::log(np) / std::log(static_cast<double>(n));
}

} // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<int> KSchedule::resolve(int n, double d) const {
    std::vector<int> out = values;
    if (!formula.empty()) {
        double base;
        if (formula == "d^(j+1)") {
            base = std::pow(d, j + 1);
        } else if (formula == "n/d^(j-1)") {
            base = n / std::pow(d, j - 1);
        } else {
            throw ValidationError("unknown k formula: " + formula);
        }
        for (double f : factors)
            out.push_back(std::max(1, static_cast<int>(std::llround(f * base))));
    }
    if (out.empty()) out.push_back(0); // strategy-sized team
    for (int k : out) {
        if (k < 0) throw ValidationError("k schedule entries must be >= 0");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SweepSpec SweepSpec::from_json(const nlohmann::json& j) {
    SweepSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        spec.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
        if (j.contains("trials")) spec.trials = j.at("trials").get<int>();
        if (j.contains("k_schedule")) {
            const auto& ks = j.at("k_schedule");
            if (ks.is_array()) {
                spec.k_schedule.values = ks.get<std::vector<int>>();
            } else {
                spec.k_schedule.formula = ks.at("formula").get<std::string>();
                if (ks.contains("j")) spec.k_schedule.j = ks.at("j").get<int>();
                if (ks.contains("factors"))
                    spec.k_schedule.factors = ks.at("factors").get<std::vector<double>>();
            }
        }
        if (j.contains("cops")) {
            spec.cops.name = j.at("cops").at("name").get<std::string>();
            if (j.at("cops").contains("params")) spec.cops.params = j.at("cops").at("params");
        }
        if (j.contains("robber")) {
            spec.robber.name = j.at("robber").at("name").get<std::string>();
            if (j.at("robber").contains("params"))
                spec.robber.params = j.at("robber").at("params");
        }
        if (j.contains("master_seed"))
            spec.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("paired")) spec.paired = j.at("paired").get<bool>();
        if (j.contains("max_rounds")) spec.max_rounds = j.at("max_rounds").get<int>();
        if (j.contains("win_threshold"))
            spec.win_threshold = j.at("win_threshold").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("sweep config: ") + e.what());
    }
    if (spec.n < 1) throw ValidationError("sweep config: n must be >= 1");
    if (spec.trials < 1) throw ValidationError("sweep config: trials must be >= 1");
    if (spec.alpha_grid.empty()) throw ValidationError("sweep config: alpha_grid empty");
    for (double a : spec.alpha_grid) {
        if (a <= 0 || a >= 1)
            throw ValidationError("sweep config: alpha must lie in (0,1)");
    }
    return spec;
}

nlohmann::json SweepSpec::to_json() const {
    nlohmann::json ks;
    if (k_schedule.formula.empty()) {
        ks = k_schedule.values;
    } else {
        ks = nlohmann::json{{"formula", k_schedule.formula},
                            {"j", k_schedule.j},
                            {"factors", k_schedule.factors}};
    }
    return nlohmann::json{{"n", n},
                          {"alpha_grid", alpha_grid},
                          {"trials", trials},
                          {"k_schedule", ks},
                          {"cops", {{"name", cops.name}, {"params", cops.params}}},
                          {"robber", {{"name", robber.name}, {"params", robber.params}}},
                          {"master_seed", master_seed},
                          {"paired", paired},
                          {"max_rounds", max_rounds},
                          {"win_threshold", win_threshold}};
}

std::string outcome_label(const StrategyTrace& trace) {
    if (trace.cop_status == "trap_failed") return "TrapFailed";
    if (trace.cop_status == "trap_failed_auxiliary") return "TrapFailed-Auxiliary";
    if (trace.robber_status == "safety_lost") {
        return trace.outcome == Outcome::CopWin ? "SafetyLost-then-CopWin"
                                                : "SafetyLost-then-Survived";
    }
    return outcome_name(trace.outcome);
}

namespace {

// scripted cop side for shadow replays
class ReplayCops : public CopStrategy {
public:
    ReplayCops(std::vector<int> placement, std::vector<CopMove> moves)
        : placement_(std::move(placement)), moves_(std::move(moves)) {}
    std::string name() const override { return "replay"; }
    std::vector<int> place(const Graph&, int, Rng&) override { return placement_; }
    CopMove move(const Graph&, const GameState&, Rng&) override {
        if (next_ >= moves_.size()) return {};
        return moves_[next_++];
    }

private:
    std::vector<int> placement_;
    std::vector<CopMove> moves_;
    std::size_t next_ = 0;
};

bool robber_is_multiset_insensitive(const std::string& name) {
    return name == "greedy_robber" || name == "sitting_robber";
}

// a CopWin playout replayed with one duplicated cop must still be a CopWin,
// which is what makes the paired k-monotonicity claim exact
void check_shadow_win(const Graph& g, const StrategyTrace& trace,
                      const StrategySpec& robber_spec, std::uint64_t seed,
                      int max_rounds) {
    if (trace.placement.empty()) return;
    std::vector<int> placement = trace.placement;
    placement.push_back(trace.placement.front());
    std::vector<CopMove> moves;
    for (const auto& m : trace.moves) {
        if (m.side == "cops") moves.push_back(m.cop);
    }
    ReplayCops cops(std::move(placement), std::move(moves));
    auto robber = make_robber_strategy(robber_spec.name, robber_spec.params);
    PlayConfig cfg;
    cfg.k = 0;
    cfg.max_rounds = max_rounds;
    cfg.seed = seed;
    const auto shadow = play(g, cops, *robber, cfg);
    if (shadow.outcome != Outcome::CopWin || shadow.rounds > trace.rounds) {
        throw AssertionViolation(
            "shadow playout lost a game the original cop team won (seed " +
            std::to_string(seed) + ")");
    }
}

struct TrialOutput {
    std::vector<ExperimentRecord> records;
    std::vector<std::pair<int, bool>> wins; // scheduled-k index -> cop win
};

} // namespace

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    if (spec.n < 1) throw ValidationError("sweep: n must be >= 1");
    if (spec.trials < 1) throw ValidationError("sweep: trials must be >= 1");
    for (double a : spec.alpha_grid) {
        if (a <= 0 || a >= 1) throw ValidationError("sweep: alpha must lie in (0,1)");
    }
    // strategies must exist before any work starts
    make_cop_strategy(spec.cops.name, spec.cops.params);
    make_robber_strategy(spec.robber.name, spec.robber.params);

    struct Cell {
        double alpha;
        double p;
        std::vector<int> ks;
    };
    std::vector<Cell> cells;
    for (double alpha : spec.alpha_grid) {
        Cell c;
        c.alpha = alpha;
        c.p = std::min(1.0, std::pow(static_cast<double>(spec.n), alpha - 1.0));
        c.ks = spec.k_schedule.resolve(spec.n, spec.n * c.p);
        cells.push_back(std::move(c));
    }

    const int total_trials = static_cast<int>(cells.size()) * spec.trials;
    std::vector<TrialOutput> slots(total_trials);
    std::vector<std::exception_ptr> errors(total_trials);
    std::atomic<int> next{0};

    const auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= total_trials) return;
            const int ci = idx / spec.trials;
            const int trial = idx % spec.trials;
            try {
                const Cell& cell = cells[ci];
                const std::uint64_t trial_seed =
                    mix_seed(mix_seed(spec.master_seed, ci), trial);
                const Graph g = gen_gnp(spec.n, cell.p, mix_seed(trial_seed, 0));
                TrialOutput out;
                for (std::size_t ki = 0; ki < cell.ks.size(); ++ki) {
                    const int k = cell.ks[ki];
                    auto cops = make_cop_strategy(spec.cops.name, spec.cops.params);
                    auto robber = make_robber_strategy(spec.robber.name, spec.robber.params);
                    PlayConfig cfg;
                    cfg.k = k;
                    cfg.max_rounds = spec.max_rounds;
                    cfg.seed = spec.paired
                                   ? trial_seed
                                   : mix_seed(trial_seed, 1 + static_cast<int>(ki));
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto trace = play(g, *cops, *robber, cfg);
                    const auto t1 = std::chrono::steady_clock::now();

                    ExperimentRecord rec;
                    rec.n = spec.n;
                    rec.p = cell.p;
                    rec.alpha = recompute_alpha(spec.n, cell.p);
                    rec.trial = trial;
                    rec.seed = cfg.seed;
                    rec.cop_strategy = cops->name();
                    rec.cop_params = cops->params().dump();
                    rec.robber_strategy = robber->name();
                    rec.robber_params = robber->params().dump();
                    rec.k = static_cast<int>(trace.placement.size());
                    rec.outcome = outcome_label(trace);
                    rec.rounds = trace.rounds;
                    if (spec.timings) {
                        rec.wall_ms =
                            std::chrono::duration<double, std::milli>(t1 - t0).count();
                        rec.has_wall = true;
                    }
                    out.records.push_back(std::move(rec));
                    const bool win = trace.outcome == Outcome::CopWin;
                    out.wins.emplace_back(static_cast<int>(ki), win);

                    if (spec.paired && win &&
                        robber_is_multiset_insensitive(spec.robber.name)) {
                        check_shadow_win(g, trace, spec.robber, cfg.seed,
                                         spec.max_rounds);
                    }
                }
                slots[idx] = std::move(out);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    const int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (int i = 0; i < total_trials; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }

    SweepResult result;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        const Cell& cell = cells[ci];
        std::vector<int> wins(cell.ks.size(), 0);
        for (int trial = 0; trial < spec.trials; ++trial) {
            auto& out = slots[ci * spec.trials + trial];
            for (auto& rec : out.records) result.records.push_back(std::move(rec));
            for (auto [ki, win] : out.wins) wins[ki] += win ? 1 : 0;
        }
        int k_star = -1;
        for (std::size_t ki = 0; ki < cell.ks.size(); ++ki) {
            SweepSummaryRow row;
            row.n = spec.n;
            row.alpha = cell.alpha;
            row.p = cell.p;
            row.k = cell.ks[ki];
            row.trials = spec.trials;
            row.cop_wins = wins[ki];
            row.win_rate = static_cast<double>(wins[ki]) / spec.trials;
            if (k_star < 0 && row.win_rate >= spec.win_threshold) k_star = row.k;
            result.summary.push_back(row);
        }
        result.thresholds.push_back({spec.n, cell.alpha, cell.p, k_star});
    }
    return result;
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,p,alpha,trial,seed,cop_strategy,cop_params,robber_strategy,"
                      "robber_params,k,outcome,rounds,wall_ms\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + fmt_double(r.p) + ',' + fmt_double(r.alpha) +
               ',' + std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
               csv_escape(r.cop_strategy) + ',' + csv_escape(r.cop_params) + ',' +
               csv_escape(r.robber_strategy) + ',' + csv_escape(r.robber_params) + ',' +
               std::to_string(r.k) + ',' + r.outcome + ',' + std::to_string(r.rounds) +
               ',' + (r.has_wall ? fmt_double(r.wall_ms) : std::string()) + '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<SweepSummaryRow>& rows) {
    std::string out = "n,alpha,p,k,trials,cop_wins,win_rate\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + fmt_double(r.alpha) + ',' + fmt_double(r.p) +
               ',' + std::to_string(r.k) + ',' + std::to_string(r.trials) + ',' +
               std::to_string(r.cop_wins) + ',' + fmt_rate(r.win_rate) + '\n';
    }
    return out;
}

std::string thresholds_csv(const std::vector<SweepThresholdRow>& rows) {
    std::string out = "n,alpha,p,k_star\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + fmt_double(r.alpha) + ',' + fmt_double(r.p) +
               ',' + std::to_string(r.k_star) + '\n';
    }
    return out;
}

AuditResult audit_graphs(const std::vector<Graph>& graphs, const SolveOptions& opt) {
    AuditResult result;
    for (const auto& g : graphs) {
        AuditRow row;
        row.graph6 = graph6_encode(g);
        row.report = numbers_report(g, opt);
        if (!row.report.degenerate) {
            if (!row.report.chain_ok) {
                throw AssertionViolation("proven chain c <= xi <= gamma*Delta failed on " +
                                         row.graph6);
            }
            if (row.report.m >= 1 && row.report.xi < 1) {
                throw AssertionViolation("xi < 1 on a graph with edges: " + row.graph6);
            }
            if (!row.report.conjecture_ok) result.violations.push_back(row);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

AuditResult audit_small_graphs(int n_max, bool connected_only, const SolveOptions& opt) {
    return audit_graphs(enumerate_graphs_up_to(n_max, connected_only), opt);
}

std::string audit_csv(const std::vector<AuditRow>& rows) {
    std::string out = "graph6,n,m,xi,cop_number,gamma,gamma_exact,max_degree,degenerate,"
                      "chain_ok,conjecture_ok\n";
    for (const auto& r : rows) {
        const auto& rep = r.report;
        out += csv_escape(r.graph6) + ',' + std::to_string(rep.n) + ',' +
               std::to_string(rep.m) + ',' + std::to_string(rep.xi) + ',' +
               std::to_string(rep.cop) + ',' + std::to_string(rep.gamma) + ',' +
               std::to_string(rep.gamma_exact ? 1 : 0) + ',' +
               std::to_string(rep.max_degree) + ',' +
               std::to_string(rep.degenerate ? 1 : 0) + ',' +
               std::to_string(rep.chain_ok ? 1 : 0) + ',' +
               std::to_string(rep.conjecture_ok ? 1 : 0) + '\n';
    }
    return out;
}

RandomAuditResult audit_random(const RandomAuditConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("audit_random: trials must be >= 1");
    if (cfg.p < 0 || cfg.p > 1) throw ValidationError("audit_random: p must lie in [0,1]");
    RandomAuditResult result;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t seed_t = mix_seed(cfg.seed, trial);
        const Graph g = gen_gnp(cfg.n, cfg.p, seed_t);
        RandomAuditRow row;
        row.trial = trial;
        row.seed = seed_t;
        row.n = g.n();
        row.m = g.m();
        row.max_degree = g.max_degree();
        if (!cfg.bounds_mode) {
            row.exact = true;
            row.graph6 = graph6_encode(g);
            row.report = numbers_report(g, cfg.solve);
            row.gamma = row.report.gamma;
            if (!row.report.degenerate) {
                if (!row.report.chain_ok) {
                    throw AssertionViolation("proven chain failed on sampled graph " +
                                             row.graph6);
                }
                if (!row.report.conjecture_ok)
                    result.violations.push_back({row.graph6, row.report});
            }
        } else {
            row.exact = false;
            const auto dom = domination_number(g);
            row.gamma = dom.gamma;
            row.c_upper = dom.gamma; // a dominating team wins the classic game

            // cop side: density ladder, upper bound from team sizes that win
            std::vector<std::pair<int, bool>> sized; // (team size, cop win)
            for (std::size_t ci = 0; ci < cfg.c_ladder.size(); ++ci) {
                DensityCopConfig dcfg;
                dcfg.r = cfg.r;
                dcfg.C = cfg.c_ladder[ci];
                DensityCopStrategy cops(dcfg);
                auto robber = make_greedy_robber();
                PlayConfig pc;
                pc.k = 0;
                pc.seed = mix_seed(seed_t, 100 + static_cast<int>(ci));
                const auto trace = play(g, cops, *robber, pc);
                sized.emplace_back(static_cast<int>(trace.placement.size()),
                                   trace.outcome == Outcome::CopWin);
            }
            std::sort(sized.begin(), sized.end());
            int upper = -1;
            for (int i = static_cast<int>(sized.size()) - 1; i >= 0; --i) {
                if (!sized[i].second) break;
                upper = sized[i].first;
            }
            row.xi_upper = upper;

            // robber side: evasion survival pushes the lower bound up
            std::vector<int> k_ladder = cfg.k_ladder;
            if (k_ladder.empty()) {
                for (int k = 1; k <= 256; k *= 2) k_ladder.push_back(k);
            }
            int best_survived = 0;
            for (std::size_t ki = 0; ki < k_ladder.size(); ++ki) {
                const int k = k_ladder[ki];
                if (k < 1 || (upper >= 0 && k >= upper)) continue;
                auto cops = make_random_cops();
                EvasionConfig ecfg;
                EvasionRobberStrategy robber(ecfg);
                PlayConfig pc;
                pc.k = k;
                pc.max_rounds = cfg.survive_rounds;
                pc.seed = mix_seed(seed_t, 200 + static_cast<int>(ki));
                const auto trace = play(g, *cops, robber, pc);
                if (trace.outcome == Outcome::RobberSurvived)
                    best_survived = std::max(best_survived, k);
            }
            row.xi_lower = 1 + best_survived;
            if (row.xi_upper >= 0 && row.xi_lower > row.xi_upper) {
                throw AssertionViolation("bracket ordering violated in bounds mode");
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string random_audit_csv(const std::vector<RandomAuditRow>& rows, bool bounds_mode) {
    std::string out;
    if (!bounds_mode) {
        out = "trial,seed,graph6,n,m,xi,cop_number,gamma,gamma_exact,max_degree,"
              "degenerate,chain_ok,conjecture_ok\n";
        for (const auto& r : rows) {
            const auto& rep = r.report;
            out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
                   csv_escape(r.graph6) + ',' + std::to_string(rep.n) + ',' +
                   std::to_string(rep.m) + ',' + std::to_string(rep.xi) + ',' +
                   std::to_string(rep.cop) + ',' + std::to_string(rep.gamma) + ',' +
                   std::to_string(rep.gamma_exact ? 1 : 0) + ',' +
                   std::to_string(rep.max_degree) + ',' +
                   std::to_string(rep.degenerate ? 1 : 0) + ',' +
                   std::to_string(rep.chain_ok ? 1 : 0) + ',' +
                   std::to_string(rep.conjecture_ok ? 1 : 0) + '\n';
        }
    } else {
        out = "trial,seed,n,m,max_degree,gamma,c_upper,xi_lower,xi_upper\n";
        for (const auto& r : rows) {
            out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
                   std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
                   std::to_string(r.max_degree) + ',' + std::to_string(r.gamma) + ',' +
                   std::to_string(r.c_upper) + ',' + std::to_string(r.xi_lower) + ',' +
                   std::to_string(r.xi_upper) + '\n';
        }
    }
    return out;
}

nlohmann::json run_manifest(const std::string& command, const nlohmann::json& config,
                            std::uint64_t master_seed,
                            const std::vector<std::string>& outputs) {
    return nlohmann::json{{"tool", kToolName},  {"version", kToolVersion},
                          {"command", command}, {"config", config},
                          {"master_seed", master_seed}, {"outputs", outputs}};
}

} // namespace containment
