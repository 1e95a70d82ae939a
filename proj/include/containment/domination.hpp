#pragma once

#include <vector>

#include "containment/graph.hpp"

namespace containment {

struct DominationResult {
    int gamma = 0;            // exact value, or greedy upper bound if !exact
    bool exact = true;
    std::vector<int> witness; // dominating set of size gamma
};

// Exact gamma for n <= exact_limit (ascending-size branch search over
// bitmask closed neighborhoods), greedy upper bound above (flagged).
// exact_limit must stay <= 60.
DominationResult domination_number(const Graph& g, int exact_limit = 30);

} // namespace containment
