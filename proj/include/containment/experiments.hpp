#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "containment/game.hpp"
#include "containment/graph.hpp"
#include "containment/rng.hpp"
#include "containment/solver.hpp"

namespace containment {

inline constexpr const char* kToolName = "containment";
inline constexpr const char* kToolVersion = "0.1.0";

struct StrategySpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
};

// Explicit k list, or a formula resolved per cell from the measured average
// degree: "d^(j+1)" or "n/d^(j-1)", scaled by each factor and rounded.
struct KSchedule {
    std::vector<int> values;
    std::string formula; // "", "d^(j+1)", "n/d^(j-1)"
    int j = 1;
    std::vector<double> factors{1.0};

    std::vector<int> resolve(int n, double d) const; // ascending, deduplicated
};

struct SweepSpec {
    int n = 0;
    std::vector<double> alpha_grid; // p = n^(alpha-1)
    int trials = 1;
    KSchedule k_schedule;                    // default: single 0 = strategy-sized team
    StrategySpec cops{"random_cops", {}};
    StrategySpec robber{"greedy_robber", {}};
    std::uint64_t master_seed = kDefaultSeed;
    bool paired = true;      // same per-trial seed across the k schedule
    int max_rounds = 0;      // 0: engine default 4n
    double win_threshold = 0.5;
    bool timings = false;    // fill the wall_ms column (breaks byte determinism)

    static SweepSpec from_json(const nlohmann::json& j); // throws ValidationError
    nlohmann::json to_json() const;
};

struct ExperimentRecord {
    int n = 0;
    double p = 0;
    double alpha = 0; // log(n p)/log n, recomputed
    int trial = 0;
    std::uint64_t seed = 0;
    std::string cop_strategy;
    std::string cop_params; // compact JSON
    std::string robber_strategy;
    std::string robber_params;
    int k = 0; // actual team size
    std::string outcome;
    int rounds = 0;
    double wall_ms = 0;
    bool has_wall = false;
};

struct SweepSummaryRow {
    int n = 0;
    double alpha = 0;
    double p = 0;
    int k = 0;
    int trials = 0;
    int cop_wins = 0; // CopWin or SafetyLost-then-CopWin
    double win_rate = 0;
};

struct SweepThresholdRow {
    int n = 0;
    double alpha = 0;
    double p = 0;
    int k_star = -1; // smallest scheduled k with win_rate >= threshold
};

struct SweepResult {
    std::vector<ExperimentRecord> records;
    std::vector<SweepSummaryRow> summary;
    std::vector<SweepThresholdRow> thresholds;
};

// Outcome label with strategy statuses folded in: trap failures take
// precedence, then SafetyLost-then-*, then the engine outcome.
std::string outcome_label(const StrategyTrace& trace);

// Plays every (cell, trial, k) cell deterministically; per-trial RNG
// substream = mix_seed(mix_seed(master, cell), trial). In paired mode every
// CopWin playout with a multiset-insensitive robber (greedy/sitting) is
// replayed with one duplicated shadow cop and must still end CopWin, making
// k-monotonicity an exact assertion (AssertionViolation otherwise).
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

std::string records_csv(const std::vector<ExperimentRecord>& records);
std::string summary_csv(const std::vector<SweepSummaryRow>& rows);
std::string thresholds_csv(const std::vector<SweepThresholdRow>& rows);

// ---- audits ----

struct AuditRow {
    std::string graph6;
    NumbersReport report;
};

struct AuditResult {
    std::vector<AuditRow> rows;
    std::vector<AuditRow> violations; // conjecture_ok == false, non-degenerate
};

// Exact audit; throws AssertionViolation when the proven chain fails on a
// non-degenerate graph (serializing the graph in the message). Conjecture
// misses are findings, collected in violations, never thrown.
AuditResult audit_graphs(const std::vector<Graph>& graphs, const SolveOptions& opt = {});
AuditResult audit_small_graphs(int n_max, bool connected_only,
                               const SolveOptions& opt = {});

std::string audit_csv(const std::vector<AuditRow>& rows);

struct RandomAuditConfig {
    int n = 6;
    double p = 0.5;
    int trials = 20;
    std::uint64_t seed = kDefaultSeed;
    bool bounds_mode = false; // strategy brackets instead of exact solving
    // bounds mode:
    int r = 1;
    std::vector<double> c_ladder{1, 2, 4, 8, 16, 32}; // density constants, ascending
    std::vector<int> k_ladder;                        // robber-side sizes; empty: 2^i
    int survive_rounds = 200;
    SolveOptions solve;
};

struct RandomAuditRow {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string graph6; // exact mode only (small n)
    int n = 0, m = 0;
    int max_degree = 0;
    int gamma = 0;
    bool exact = true;
    // exact mode:
    NumbersReport report;
    // bounds mode: xi_lower <= xi_upper structurally; -1 = no bound found
    int xi_lower = -1;
    int xi_upper = -1;
    int c_upper = -1; // gamma, since a dominating team wins the classic game
};

struct RandomAuditResult {
    std::vector<RandomAuditRow> rows;
    std::vector<AuditRow> violations; // exact mode conjecture misses
};

RandomAuditResult audit_random(const RandomAuditConfig& cfg);

std::string random_audit_csv(const std::vector<RandomAuditRow>& rows, bool bounds_mode);

// ---- manifest ----

// {tool, version, command, config, master_seed, outputs}; no timestamps, so
// repeated runs stay byte-identical.
nlohmann::json run_manifest(const std::string& command, const nlohmann::json& config,
                            std::uint64_t master_seed,
                            const std::vector<std::string>& outputs);

std::string csv_escape(const std::string& field);

} // namespace containment
