#pragma once

#include <memory>
#include <vector>

#include "json.hpp"

#include "containment/game.hpp"
#include "containment/graph.hpp"

namespace containment {

enum class Variant { Containment, Classic };

struct SolveOptions {
    // Cap on 2 * C(P+k-1,k) * n game states and on the solver's internal
    // expanded state count (cop moves are split into single-cop steps).
    long long state_budget = 50'000'000;
};

struct SolveResult {
    int k = 0;
    bool cop_win = false;
    long long states_total = 0;   // 2 * C(P+k-1,k) * n
    long long states_winning = 0; // cop-winning among those
    long long iterations = 0;     // worklist pops
    std::vector<int> witness_placement; // lexicographically least winning placement

    nlohmann::json to_json() const;
};

// Fixed-point table for one (graph, k, variant). Cop positions are edges
// for Containment, vertices for Classic; multisets are kept sorted.
class SolvedTable {
public:
    virtual ~SolvedTable() = default;
    virtual bool cop_win() const = 0;
    virtual const std::vector<int>& witness() const = 0;
    virtual SolveResult result() const = 0;
    // winning flag of a full game state
    virtual bool state_winning(const std::vector<int>& cops, int robber,
                               bool cops_to_move) const = 0;
    // value-following full cop move (pairs) from a winning cop-turn state;
    // each step picks the successor of least win-depth, ties lexicographic
    virtual CopMove best_cop_move(const std::vector<int>& cops, int robber) const = 0;
};

std::shared_ptr<SolvedTable> solve_table(const Graph& g, int k, Variant variant,
                                         const SolveOptions& opt = {});

SolveResult solve_game(const Graph& g, int k, Variant variant, const SolveOptions& opt = {});

// Containment needs m >= 1 (throws ValidationError otherwise); the xi=0
// convention for edgeless graphs lives in containability_number.
bool cops_win_containment(const Graph& g, int k, const SolveOptions& opt = {});
bool cops_win_classic(const Graph& g, int k, const SolveOptions& opt = {});

// Both numbers decompose over components and add up: the robber commits
// to a component only after seeing the placement, so the cops must cover
// every component at once. Isolated vertices contribute 0 to xi (capture
// is vacuous there) and 1 to c.
int containability_number(const Graph& g, const SolveOptions& opt = {});
int cop_number(const Graph& g, const SolveOptions& opt = {});

struct OracleOptions {
    int max_n = 7;
    int max_k = 3;
    long long node_budget = 50'000'000;
};

// Independent cross-check: forward value iteration over the fully enumerated
// state space (sorted cop multiset, robber vertex, side to move), built on
// the engine's move enumerators. Starting from "capture states are cop wins,
// everything else a robber win", states flip to cop wins until a fixed point,
// so a cop win means capture is forced in finitely many moves. Deliberately
// a different algorithm from solve_table's backward retrograde worklist.
bool minimax_cops_win(const Graph& g, int k, Variant variant, const OracleOptions& opt = {});

struct NumbersReport {
    int n = 0;
    int m = 0;
    int xi = 0;
    int cop = 0;
    int gamma = 0;
    int max_degree = 0;
    bool gamma_exact = true;
    bool degenerate = false; // no edges or isolated vertex: chain not asserted
    bool chain_ok = true;    // c <= xi <= gamma * max_degree
    bool conjecture_ok = true; // xi <= c * max_degree (recorded, never asserted)
    std::vector<int> gamma_witness;
    std::vector<int> xi_witness; // winning placement, global edge ids

    nlohmann::json to_json() const;
};

// Computes xi, c, gamma, Delta with witnesses, evaluates the proven chain
// (skipped and flagged on degenerate graphs) and records the conjecture
// comparison. Callers escalate chain_ok == false as a hard failure.
NumbersReport numbers_report(const Graph& g, const SolveOptions& opt = {});

// Cop strategy that follows a solved table: places the witness placement
// and plays value-following moves. For engine replays of solver results.
std::unique_ptr<CopStrategy> make_table_cop_strategy(std::shared_ptr<SolvedTable> table);

} // namespace containment
