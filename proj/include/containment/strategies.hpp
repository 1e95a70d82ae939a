#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "containment/game.hpp"
#include "containment/graph.hpp"

namespace containment {

// ---- baselines ----
// random_cops: uniformly shuffled edge prefix, then each cop takes a
// line-graph step reducing BFS distance to the robber (ties lexicographic).
// greedy_cops: same chase, placement = edges sorted by endpoint degree sum.
// greedy_robber: start maximizing distance to the nearest cop edge, move to
// a legal neighbor strictly increasing that distance, else pass.
// sitting_robber: same start, always passes.
std::unique_ptr<CopStrategy> make_random_cops();
std::unique_ptr<CopStrategy> make_greedy_cops();
std::unique_ptr<RobberStrategy> make_greedy_robber();
std::unique_ptr<RobberStrategy> make_sitting_robber();

// ---- matching cop strategy ----
// Two cops per maximum-matching edge plus one on an edge at the odd
// unmatched vertex; whoever the robber sits next to, the cop associated
// with each neighbor u slides onto the edge u-robber, capturing within one
// cop move. place() throws ValidationError unless the graph has a perfect
// or near-perfect matching; team size is always <= n (pass k <= 0).
std::unique_ptr<CopStrategy> make_matching_cops();

// ---- density cop strategy ----

struct DensityCopConfig {
    int r = 1;                         // ball radius parameter
    std::string mode = "boundary_out"; // q = C d^r / n, trap between N_r and N_{r+1}
                                       // "boundary_in": q = C log n / d^r, N_{r-1} / N_r
    double C = 1.0;                    // oversampling constant >= 1
    long long aux_budget = -1;         // auxiliary cops; -1: 2 d^{r+1}, capped by m
    int demand_cap = 250;              // boundary_in only: max trap edges per boundary vertex
};

struct DensityDerived {
    double d = 0;     // 2m/n
    double q_raw = 0; // before clamping to [0,1]
    double q = 0;
    int rho_in = 0;  // trap sits between layers rho_in and rho_out = rho_in+1
    int rho_out = 0;
    long long aux = 0;
    int main_cops = 0;
};

struct DensityPlanInfo {
    bool planned = false;
    std::string fail; // "", "trap_failed", "trap_failed_auxiliary"
    int robber_start = -1;
    std::vector<int> trap_edges;          // X, sorted edge ids
    std::vector<int> trap_cops;           // assigned cop index per trap edge
    std::vector<std::vector<int>> routes; // per trap edge: cop position at cop move 0..rho_out
    std::vector<int> ball;                // N_{rho_in}[start], sorted
    std::vector<int> aux_targets;         // edges inside the ball, sorted
};

class DensityCopStrategy : public CopStrategy {
public:
    explicit DensityCopStrategy(DensityCopConfig cfg);
    ~DensityCopStrategy() override;
    std::string name() const override { return "density"; }
    nlohmann::json params() const override;
    std::vector<int> place(const Graph& g, int k, Rng& rng) override;
    CopMove move(const Graph& g, const GameState& s, Rng& rng) override;
    std::string status() const override;

    const DensityDerived& derived() const; // valid after place()
    const DensityPlanInfo& plan() const;   // valid after the first move()

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// ---- evasion robber strategy ----

struct EvasionConfig {
    int j = 1;
    double alpha_override = 0; // 0: measured log d / log n
    double d_override = 0;     // 0: measured 2m/n
};

struct EvasionDerived {
    double d = 0;
    double alpha = 0;
    double c = 0; // 3/(1-2j a) when a < 1/(2j), else 6/(1-(2j-1) a)
    double t = 0; // d / (30 c (2j+1))
    long long K = 0; // floor(t^(j+1)), the team size the analysis defeats
};

// throws ValidationError when the derived thresholds are not positive
EvasionDerived derive_evasion(const Graph& g, const EvasionConfig& cfg);

// per candidate neighbor y of the current vertex v: cop counts on edges at
// distance r from y in G minus {v, deadly}, r = 1..2j, plus danger flags
struct DangerProfile {
    int y = -1;
    std::vector<long long> counts;   // index r-1
    std::vector<char> dangerous;     // index r, r = 0..2j; [0] = edge vy occupied
    bool excluded_by_deadly = false; // deadly within distance 2j of y in G minus v
};

struct EvasionRoundLog {
    int round = 0;
    int vertex = -1; // v before this move
    int deadly = -1; // x, the vertex left in the previous round (-1: none)
    bool safe = false; // the safe predicate at v, logged, never asserted
    std::vector<int> cops; // cop edge multiset snapshot
    std::vector<DangerProfile> profiles;
    int chosen = -1; // -1: pass
};

class EvasionRobberStrategy : public RobberStrategy {
public:
    explicit EvasionRobberStrategy(EvasionConfig cfg);
    ~EvasionRobberStrategy() override;
    std::string name() const override { return "evasion"; }
    nlohmann::json params() const override;
    int place(const Graph& g, const GameState& s, Rng& rng) override;
    int move(const Graph& g, const GameState& s, Rng& rng) override;
    std::string status() const override;

    const EvasionDerived& derived() const; // valid after place()
    const std::vector<EvasionRoundLog>& rounds() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// ---- factories (names as used in CLI and experiment rows) ----
// cops: random_cops, greedy_cops, matching, density
// robbers: greedy_robber, sitting_robber, evasion
std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& name,
                                               const nlohmann::json& params = {});
std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name,
                                                     const nlohmann::json& params = {});

} // namespace containment
