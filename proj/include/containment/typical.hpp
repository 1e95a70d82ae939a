#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "containment/graph.hpp"

namespace containment {

struct TypicalTolerances {
    double ratio_lo = 0.5;          // |N_r[v]| / min(d^r, n) band
    double ratio_hi = 1.5;
    double min_pass_fraction = 0.95;
    int pairs_per_vertex = 5;       // path-count pairs sampled per vertex
    int path_i = 2;                 // path length checked against 3/(1-i*alpha)
};

struct TypicalProperty {
    std::string name;
    bool pass = false;
    double measured_min = 0.0;
    double measured_max = 0.0;
    double bound_lo = 0.0;
    double bound_hi = 0.0;
    int samples = 0;
    int failures = 0;
};

struct TypicalReport {
    bool all_pass = false;
    double d = 0.0;
    double alpha = 0.0; // log d / log n
    std::vector<TypicalProperty> properties;
};

// Checks the three "typical random graph" properties the strategies lean
// on, on a vertex sample:
//   ball_expansion: |N_r[v]| / min(d^r, n) within [ratio_lo, ratio_hi]
//                   for at least min_pass_fraction of sampled vertices;
//   back_degree:    max #edges from a vertex of N_{r+1}(v) into N_r(v)
//                   <= 250 when d <= n^0.49, else <= 3 log n / log log n;
//   path_count:     P_i(v,w) <= 3/(1-i*alpha) for sampled w in N_i(v).
TypicalReport verify_typical_properties(const Graph& g, double d, int r, int sample,
                                        std::uint64_t seed = kDefaultSeed,
                                        const TypicalTolerances& tol = {});

} // namespace containment
