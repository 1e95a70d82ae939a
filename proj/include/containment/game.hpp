#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "containment/graph.hpp"
#include "containment/rng.hpp"

namespace containment {

// Containment rules: cops stand on edges and step to edges sharing an
// endpoint; the robber stands on a vertex and may pass or cross any edge
// no cop occupies; the robber is caught when every edge at her vertex is
// occupied. Cops place first, the robber places seeing them, and capture
// is checked after the placements and after every cop move.

enum class Phase { CopPlacement, RobberPlacement, Cops, Robber };
enum class Outcome { CopWin, RobberSurvived };

inline const char* outcome_name(Outcome o) {
    return o == Outcome::CopWin ? "CopWin" : "RobberSurvived";
}

struct GameState {
    std::vector<int> cops; // sorted edge-id multiset
    int robber = -1;
    Phase phase = Phase::CopPlacement;
    int round = 0;
};

// Simultaneous per-cop reassignments (from edge, to edge); cops not listed
// stay put. from == to is a legal no-op entry.
using CopMove = std::vector<std::pair<int, int>>;

bool is_capture(const Graph& g, const std::vector<int>& cops, int robber);
bool is_capture(const Graph& g, const GameState& s);

// All distinct cop multisets reachable in one cop move (identity included),
// deduplicated across cop permutations, sorted.
std::vector<std::vector<int>> cop_successor_multisets(const Graph& g,
                                                      const std::vector<int>& cops);

// Stay plus every neighbor reachable over a cop-free edge.
std::vector<int> legal_robber_targets(const Graph& g, const GameState& s);

// Both throw ValidationError on illegal moves and advance phase/round.
void apply_cop_move(const Graph& g, GameState& s, const CopMove& move);
void apply_robber_move(const Graph& g, GameState& s, int target);

class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    virtual nlohmann::json params() const { return nlohmann::json::object(); }
    // k <= 0 lets the strategy pick its own team size.
    virtual std::vector<int> place(const Graph& g, int k, Rng& rng) = 0;
    virtual CopMove move(const Graph& g, const GameState& s, Rng& rng) = 0;
    // "" while healthy; "trap_failed" / "trap_failed_auxiliary" etc.
    virtual std::string status() const { return {}; }
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual std::string name() const = 0;
    virtual nlohmann::json params() const { return nlohmann::json::object(); }
    virtual int place(const Graph& g, const GameState& s, Rng& rng) = 0;
    virtual int move(const Graph& g, const GameState& s, Rng& rng) = 0;
    virtual std::string status() const { return {}; }
};

struct TraceMove {
    std::string side; // "cops" | "robber"
    CopMove cop;
    int robber_to = -1;
};

struct StrategyTrace {
    std::vector<int> placement;
    int robber_start = -1;
    std::vector<TraceMove> moves;
    Outcome outcome = Outcome::RobberSurvived;
    int rounds = 0;
    std::string cop_status;
    std::string robber_status;

    nlohmann::json to_json() const;
};

StrategyTrace trace_from_json(const nlohmann::json& j);

struct PlayConfig {
    int k = 0;          // 0: strategy decides team size
    int max_rounds = 0; // 0: 4 * n
    std::uint64_t seed = kDefaultSeed;
};

// Called after every applied move; state.phase is the side to act next.
using PlayObserver = std::function<void(const GameState&)>;

StrategyTrace play(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                   const PlayConfig& cfg = {}, const PlayObserver& observer = nullptr);

} // namespace containment
