#include "containment/typical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "containment/errors.hpp"
#include "containment/neighborhoods.hpp"

namespace containment {

TypicalReport verify_typical_properties(const Graph& g, double d, int r, int sample,
                                        std::uint64_t seed, const TypicalTolerances& tol) {
    if (g.n() < 2) throw ValidationError("verify_typical_properties: graph too small");
    if (d <= 1.0) throw ValidationError("verify_typical_properties: d must be > 1");
    if (r < 1) throw ValidationError("verify_typical_properties: r must be >= 1");
    if (sample < 1) throw ValidationError("verify_typical_properties: sample must be >= 1");

    const int n = g.n();
    TypicalReport report;
    report.d = d;
    report.alpha = std::log(d) / std::log(static_cast<double>(n));

    Rng rng(seed);
    std::vector<int> sampled(sample);
    for (int i = 0; i < sample; ++i) sampled[i] = static_cast<int>(rng.next_below(n));

    TypicalProperty expansion{"ball_expansion", false, std::numeric_limits<double>::max(),
                              0.0, tol.ratio_lo, tol.ratio_hi, sample, 0};
    TypicalProperty back{"back_degree", false, 0.0, 0.0, 0.0, 0.0, sample, 0};
    back.bound_hi = d <= std::pow(static_cast<double>(n), 0.49)
                        ? 250.0
                        : 3.0 * std::log(static_cast<double>(n)) /
                              std::log(std::log(static_cast<double>(n)));

    const int i_path = tol.path_i;
    TypicalProperty paths{"path_count", false, 0.0, 0.0, 0.0, 0.0, 0, 0};
    const bool path_applicable = i_path * report.alpha < 1.0;
    if (path_applicable) paths.bound_hi = 3.0 / (1.0 - i_path * report.alpha);

    const double target = std::min(std::pow(d, r), static_cast<double>(n));

    for (int v : sampled) {
        const auto dist = bfs_dist(g, v, std::max(r + 1, i_path));

        // ball expansion
        long long ball = 0;
        for (int u = 0; u < n; ++u)
            if (dist[u] >= 0 && dist[u] <= r) ++ball;
        const double ratio = static_cast<double>(ball) / target;
        expansion.measured_min = std::min(expansion.measured_min, ratio);
        expansion.measured_max = std::max(expansion.measured_max, ratio);
        if (ratio < tol.ratio_lo || ratio > tol.ratio_hi) ++expansion.failures;

        // back degree: edges from N_{r+1}(v) back into N_r(v)
        std::vector<int> back_count(n, 0);
        for (auto [a, b] : g.edges()) {
            if (dist[a] == r + 1 && dist[b] == r) ++back_count[a];
            else if (dist[b] == r + 1 && dist[a] == r) ++back_count[b];
        }
        int worst = 0;
        for (int u = 0; u < n; ++u)
            if (dist[u] == r + 1) worst = std::max(worst, back_count[u]);
        back.measured_max = std::max(back.measured_max, static_cast<double>(worst));
        if (worst > back.bound_hi) ++back.failures;

        // path counts to sampled partners in N_i(v)
        if (path_applicable) {
            std::vector<int> shell;
            for (int u = 0; u < n; ++u)
                if (dist[u] == i_path) shell.push_back(u);
            for (int t = 0; t < tol.pairs_per_vertex && !shell.empty(); ++t) {
                const int w = shell[rng.next_below(shell.size())];
                const double count = static_cast<double>(count_paths(g, v, w, i_path));
                paths.measured_max = std::max(paths.measured_max, count);
                ++paths.samples;
                if (count > paths.bound_hi) ++paths.failures;
            }
        }
    }

    expansion.pass = static_cast<double>(sample - expansion.failures) >=
                     tol.min_pass_fraction * static_cast<double>(sample);
    back.pass = back.failures == 0;
    paths.pass = path_applicable ? paths.failures == 0 : true;

    report.properties = {expansion, back, paths};
    report.all_pass = expansion.pass && back.pass && paths.pass;
    return report;
}

} // namespace containment
