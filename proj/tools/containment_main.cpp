#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "containment/errors.hpp"
#include "containment/experiments.hpp"
#include "containment/game.hpp"
#include "containment/graph.hpp"
#include "containment/graph6.hpp"
#include "containment/rng.hpp"
#include "containment/solver.hpp"
#include "containment/strategies.hpp"

namespace {

using namespace containment;

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

void write_manifest(const std::string& path, const std::string& command,
                    const nlohmann::json& config, std::uint64_t seed,
                    const std::vector<std::string>& outputs) {
    write_text(path, run_manifest(command, config, seed, outputs).dump(2) + "\n");
}

Graph load_graph(const std::string& path, bool graph6) {
    if (graph6) {
        const auto graphs = read_graph6_file(path);
        if (graphs.empty()) throw ValidationError("no graph6 lines in " + path);
        return graphs.front();
    }
    return read_edge_list_file(path);
}

nlohmann::json parse_params(const std::string& text) {
    if (text.empty()) return nlohmann::json::object();
    const auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw ValidationError("strategy params are not valid JSON: " + text);
    return parsed;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

int cmd_gen(int n, double p, std::uint64_t seed, const std::string& out) {
    const Graph g = gen_gnp(n, p, seed);
    write_edge_list_file(out, g);
    write_manifest(out + ".manifest.json", "gen",
                   {{"n", n}, {"p", p}, {"out", out}}, seed, {out});
    std::cout << "wrote " << out << " (n=" << g.n() << " m=" << g.m() << ")\n";
    return 0;
}

int cmd_solve(const std::string& path, bool graph6, const std::string& variant_name,
              int k, bool number, bool report, long long budget,
              const std::string& out) {
    const Graph g = load_graph(path, graph6);
    const Variant variant =
        variant_name == "classic" ? Variant::Classic : Variant::Containment;
    SolveOptions opt;
    opt.state_budget = budget;
    nlohmann::json result;
    if (report) {
        const auto rep = numbers_report(g, opt);
        result = rep.to_json();
        std::cout << "n=" << rep.n << " m=" << rep.m << " xi=" << rep.xi
                  << " c=" << rep.cop << " gamma=" << rep.gamma
                  << " Delta=" << rep.max_degree
                  << (rep.degenerate ? " (degenerate)" : "") << "\n";
    } else if (number) {
        if (variant == Variant::Containment) {
            const int xi = containability_number(g, opt);
            result = {{"variant", "containment"}, {"xi", xi}};
            std::cout << "xi=" << xi << "\n";
        } else {
            const int c = cop_number(g, opt);
            result = {{"variant", "classic"}, {"cop_number", c}};
            std::cout << "cop_number=" << c << "\n";
        }
    } else {
        if (k < 1) throw ValidationError("solve needs --k, --number, or --report");
        const auto res = solve_game(g, k, variant, opt);
        result = res.to_json();
        result["variant"] = variant == Variant::Classic ? "classic" : "containment";
        std::cout << "k=" << k << " value=" << (res.cop_win ? "CopWin" : "RobberWin")
                  << " states=" << res.states_total << "\n";
    }
    if (!out.empty()) {
        write_text(out, result.dump(2) + "\n");
        write_manifest(out + ".manifest.json", "solve",
                       {{"graph", path}, {"variant", variant_name}, {"k", k},
                        {"number", number}, {"report", report}, {"budget", budget}},
                       kDefaultSeed, {out});
    }
    return 0;
}

int cmd_play(const std::string& path, bool graph6, const std::string& cop_name,
             const std::string& cop_params, const std::string& robber_name,
             const std::string& robber_params, int k, int max_rounds,
             std::uint64_t seed, const std::string& trace_path) {
    const Graph g = load_graph(path, graph6);
    auto cops = make_cop_strategy(cop_name, parse_params(cop_params));
    auto robber = make_robber_strategy(robber_name, parse_params(robber_params));
    PlayConfig cfg;
    cfg.k = k;
    cfg.max_rounds = max_rounds;
    cfg.seed = seed;
    const auto trace = play(g, *cops, *robber, cfg);
    std::cout << "outcome=" << outcome_label(trace) << " rounds=" << trace.rounds
              << " k=" << trace.placement.size() << "\n";
    if (!trace_path.empty()) {
        write_text(trace_path, trace.to_json().dump(2) + "\n");
        write_manifest(trace_path + ".manifest.json", "play",
                       {{"graph", path},
                        {"cops", cop_name},
                        {"cop_params", parse_params(cop_params)},
                        {"robber", robber_name},
                        {"robber_params", parse_params(robber_params)},
                        {"k", k},
                        {"max_rounds", max_rounds}},
                       seed, {trace_path});
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              bool seed_given, std::uint64_t seed, int jobs, bool timings) {
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open sweep config: " + config_path);
    const auto parsed = nlohmann::json::parse(in, nullptr, false);
    if (parsed.is_discarded())
        throw ValidationError("sweep config is not valid JSON: " + config_path);
    SweepSpec spec = SweepSpec::from_json(parsed);
    if (seed_given) spec.master_seed = seed;
    spec.timings = timings;

    const auto result = run_sweep(spec, jobs);

    ensure_dir(out_dir);
    const std::string records_path = out_dir + "/records.csv";
    const std::string summary_path = out_dir + "/summary.csv";
    const std::string thresholds_path = out_dir + "/thresholds.csv";
    write_text(records_path, records_csv(result.records));
    write_text(summary_path, summary_csv(result.summary));
    write_text(thresholds_path, thresholds_csv(result.thresholds));
    write_manifest(out_dir + "/manifest.json", "sweep", spec.to_json(),
                   spec.master_seed, {records_path, summary_path, thresholds_path});
    for (const auto& row : result.summary) {
        std::cout << "alpha=" << row.alpha << " k=" << row.k
                  << " win_rate=" << row.win_rate << " (" << row.cop_wins << "/"
                  << row.trials << ")\n";
    }
    return 0;
}

int finish_audit(const std::string& out_dir, const std::string& command,
                 const nlohmann::json& config, std::uint64_t seed,
                 const std::string& rows_csv_text,
                 const std::vector<AuditRow>& violations, std::size_t row_count) {
    ensure_dir(out_dir);
    const std::string report_path = out_dir + "/report.csv";
    const std::string violations_path = out_dir + "/violations.csv";
    write_text(report_path, rows_csv_text);
    write_text(violations_path, audit_csv(violations));
    write_manifest(out_dir + "/manifest.json", command, config, seed,
                   {report_path, violations_path});
    std::cout << "graphs=" << row_count << " conjecture_violations="
              << violations.size() << "\n";
    if (!violations.empty()) {
        std::cout << "=== RESEARCH FINDING ===\n"
                  << "xi <= c * Delta fails on " << violations.size()
                  << " graph(s); see " << violations_path << "\n";
        return 4;
    }
    return 0;
}

int cmd_audit_small(int nmax, bool connected_only, const std::string& corpus,
                    long long budget, const std::string& out_dir) {
    SolveOptions opt;
    opt.state_budget = budget;
    AuditResult result;
    if (!corpus.empty()) {
        result = audit_graphs(read_graph6_file(corpus), opt);
    } else {
        result = audit_small_graphs(nmax, connected_only, opt);
    }
    return finish_audit(out_dir, "audit-small",
                        {{"nmax", nmax},
                         {"connected_only", connected_only},
                         {"corpus", corpus},
                         {"budget", budget}},
                        kDefaultSeed, audit_csv(result.rows), result.violations,
                        result.rows.size());
}

int cmd_audit_random(int n, double p, double alpha, int trials, std::uint64_t seed,
                     bool bounds, int r, int survive_rounds, long long budget,
                     const std::string& out_dir) {
    RandomAuditConfig cfg;
    cfg.n = n;
    cfg.p = alpha > 0 ? std::pow(static_cast<double>(n), alpha - 1.0) : p;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.bounds_mode = bounds;
    cfg.r = r;
    cfg.survive_rounds = survive_rounds;
    cfg.solve.state_budget = budget;
    const auto result = audit_random(cfg);
    return finish_audit(out_dir, "audit-random",
                        {{"n", n},
                         {"p", cfg.p},
                         {"trials", trials},
                         {"bounds", bounds},
                         {"r", r},
                         {"survive_rounds", survive_rounds},
                         {"budget", budget}},
                        seed, random_audit_csv(result.rows, bounds), result.violations,
                        result.rows.size());
}

int cmd_corpus(int nmax, bool connected_only, const std::string& out) {
    const auto graphs = enumerate_graphs_up_to(nmax, connected_only);
    write_graph6_file(out, graphs);
    write_manifest(out + ".manifest.json", "corpus",
                   {{"nmax", nmax}, {"connected_only", connected_only}}, kDefaultSeed,
                   {out});
    std::cout << "wrote " << graphs.size() << " graphs to " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"containment: cops-on-edges pursuit games, exact solvers, and "
                 "Monte Carlo experiment harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded G(n,p) edge list");
    int gen_n = 0;
    double gen_p = 0;
    std::uint64_t gen_seed = kDefaultSeed;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->required();
    gen->add_option("--seed", gen_seed, "RNG seed (fixed default)");
    gen->add_option("--out", gen_out, "output edge-list path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "exact game values on a graph file");
    std::string solve_graph, solve_variant = "containment", solve_out;
    bool solve_g6 = false, solve_number = false, solve_report = false;
    int solve_k = 0;
    long long solve_budget = SolveOptions{}.state_budget;
    solve->add_option("--graph", solve_graph, "graph file path")->required();
    solve->add_flag("--graph6", solve_g6, "graph file is graph6, first line used");
    solve->add_option("--variant", solve_variant, "containment|classic")
        ->check(CLI::IsMember({"containment", "classic"}));
    solve->add_option("--k", solve_k, "decide whether k cops win");
    solve->add_flag("--number", solve_number, "compute xi (or cop number for classic)");
    solve->add_flag("--report", solve_report, "full xi/c/gamma/Delta report");
    solve->add_option("--budget", solve_budget, "state budget");
    solve->add_option("--out", solve_out, "write result JSON here");

    // play
    auto* play_cmd = app.add_subcommand("play", "one strategy-vs-strategy playout");
    std::string play_graph, play_cops = "greedy_cops", play_cop_params;
    std::string play_robber = "greedy_robber", play_robber_params, play_trace;
    bool play_g6 = false;
    int play_k = 0, play_max_rounds = 0;
    std::uint64_t play_seed = kDefaultSeed;
    play_cmd->add_option("--graph", play_graph, "graph file path")->required();
    play_cmd->add_flag("--graph6", play_g6, "graph file is graph6, first line used");
    play_cmd->add_option("--cops", play_cops,
                         "random_cops|greedy_cops|matching|density");
    play_cmd->add_option("--cop-params", play_cop_params, "cop params JSON");
    play_cmd->add_option("--robber", play_robber,
                         "greedy_robber|sitting_robber|evasion");
    play_cmd->add_option("--robber-params", play_robber_params, "robber params JSON");
    play_cmd->add_option("--k", play_k, "team size (0: strategy decides)");
    play_cmd->add_option("--max-rounds", play_max_rounds, "round cap (0: 4n)");
    play_cmd->add_option("--seed", play_seed, "RNG seed (fixed default)");
    play_cmd->add_option("--trace", play_trace, "write trace JSON here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep from a JSON config");
    std::string sweep_config, sweep_out_dir = ".";
    std::uint64_t sweep_seed = kDefaultSeed;
    int sweep_jobs = 1;
    bool sweep_timings = false;
    sweep->add_option("--config", sweep_config, "sweep config JSON path")->required();
    sweep->add_option("--out-dir", sweep_out_dir, "output directory");
    auto* sweep_seed_opt =
        sweep->add_option("--seed", sweep_seed, "override the config master seed");
    sweep->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::Range(1, 256));
    sweep->add_flag("--timings", sweep_timings,
                    "fill wall_ms (breaks byte determinism)");

    // audit
    auto* audit = app.add_subcommand("audit", "bound chain and conjecture audits");
    audit->require_subcommand(1);
    auto* audit_small = audit->add_subcommand("small", "exhaustive small-graph audit");
    int as_nmax = 5;
    bool as_connected = false;
    std::string as_corpus, as_out_dir = ".";
    long long as_budget = SolveOptions{}.state_budget;
    audit_small->add_option("--nmax", as_nmax, "audit all graphs up to this order");
    audit_small->add_flag("--connected-only", as_connected, "connected graphs only");
    audit_small->add_option("--corpus", as_corpus, "graph6 corpus file instead");
    audit_small->add_option("--budget", as_budget, "state budget");
    audit_small->add_option("--out-dir", as_out_dir, "output directory");

    auto* audit_random_cmd = audit->add_subcommand("random", "seeded G(n,p) audit");
    int ar_n = 6, ar_trials = 20, ar_r = 1, ar_survive = 200;
    double ar_p = 0.5, ar_alpha = 0;
    std::uint64_t ar_seed = kDefaultSeed;
    bool ar_bounds = false;
    std::string ar_out_dir = ".";
    long long ar_budget = SolveOptions{}.state_budget;
    audit_random_cmd->add_option("--n", ar_n, "vertex count");
    audit_random_cmd->add_option("--p", ar_p, "edge probability");
    audit_random_cmd->add_option("--alpha", ar_alpha, "use p = n^(alpha-1) instead");
    audit_random_cmd->add_option("--trials", ar_trials, "sample count");
    audit_random_cmd->add_option("--seed", ar_seed, "RNG seed (fixed default)");
    audit_random_cmd->add_flag("--bounds", ar_bounds,
                               "strategy brackets instead of exact solving");
    audit_random_cmd->add_option("--r", ar_r, "density trap radius (bounds mode)");
    audit_random_cmd->add_option("--survive-rounds", ar_survive,
                                 "rounds the evasion robber must last (bounds mode)");
    audit_random_cmd->add_option("--budget", ar_budget, "state budget");
    audit_random_cmd->add_option("--out-dir", ar_out_dir, "output directory");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "write a graph6 corpus");
    int corpus_nmax = 5;
    bool corpus_connected = false;
    std::string corpus_out;
    corpus->add_option("--nmax", corpus_nmax, "all graphs up to this order (<= 7)");
    corpus->add_flag("--connected-only", corpus_connected, "connected graphs only");
    corpus->add_option("--out", corpus_out, "output graph6 path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_n, gen_p, gen_seed, gen_out);
        if (solve->parsed())
            return cmd_solve(solve_graph, solve_g6, solve_variant, solve_k,
                             solve_number, solve_report, solve_budget, solve_out);
        if (play_cmd->parsed())
            return cmd_play(play_graph, play_g6, play_cops, play_cop_params,
                            play_robber, play_robber_params, play_k, play_max_rounds,
                            play_seed, play_trace);
        if (sweep->parsed())
            return cmd_sweep(sweep_config, sweep_out_dir, sweep_seed_opt->count() > 0,
                             sweep_seed, sweep_jobs, sweep_timings);
        if (audit->parsed()) {
            if (audit_small->parsed())
                return cmd_audit_small(as_nmax, as_connected, as_corpus, as_budget,
                                       as_out_dir);
            if (audit_random_cmd->parsed())
                return cmd_audit_random(ar_n, ar_p, ar_alpha, ar_trials, ar_seed,
                                        ar_bounds, ar_r, ar_survive, ar_budget,
                                        ar_out_dir);
        }
        if (corpus->parsed())
            return cmd_corpus(corpus_nmax, corpus_connected, corpus_out);
        throw ValidationError("no subcommand selected");
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const AssertionViolation& e) {
        std::cerr << "=== ASSERTION VIOLATION ===\n" << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
