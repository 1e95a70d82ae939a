#include "containment/graph6.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "containment/errors.hpp"

namespace containment {

namespace {

// Bit index of pair (i,j), i < j: column-major upper triangle, which is
// exactly the graph6 bit order (0,1),(0,2),(1,2),(0,3),...
int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

} // namespace

Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw ValidationError("graph6: empty line");
    std::size_t pos = 0;
    if (line[pos] == '>') throw ValidationError("graph6: headers not supported");
    const int c0 = static_cast<unsigned char>(line[pos]);
    if (c0 == 126) throw ValidationError("graph6: long form (n > 62) not supported");
    if (c0 < 63 || c0 > 125) throw ValidationError("graph6: bad size byte");
    const int n = c0 - 63;
    ++pos;

    const int bits = n * (n - 1) / 2;
    const int bytes = (bits + 5) / 6;
    if (static_cast<int>(line.size() - pos) < bytes)
        throw ValidationError("graph6: truncated line");
    if (static_cast<int>(line.size() - pos) > bytes)
        throw ValidationError("graph6: trailing characters");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(line[pos + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw ValidationError("graph6: bad data byte");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw ValidationError("graph6: n > 62 not supported");
    const int bits = n * (n - 1) / 2;
    const int bytes = (bits + 5) / 6;
    std::string out(1 + bytes, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    for (auto [u, v] : g.edges()) {
        const int bit = pair_bit(u, v);
        out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

namespace {

using Mask = std::uint32_t; // enough for n <= 7 (21 pair bits)

Mask permute_mask(Mask mask, int n, const std::vector<int>& perm) {
    Mask out = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (mask & (Mask{1} << pair_bit(i, j))) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                out |= Mask{1} << pair_bit(a, b);
            }
        }
    }
    return out;
}

Mask canonical_mask(Mask mask, int n, const std::vector<std::vector<int>>& perms) {
    Mask best = ~Mask{0};
    for (const auto& perm : perms) best = std::min(best, permute_mask(mask, n, perm));
    return best;
}

bool mask_connected(Mask mask, int n) {
    if (n <= 1) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!(frontier & (1u << v))) continue;
            for (int w = 0; w < n; ++w) {
                if (w == v || (seen & (1u << w))) continue;
                const int i = std::min(v, w), j = std::max(v, w);
                if (mask & (Mask{1} << pair_bit(i, j))) next |= 1u << w;
            }
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << n) - 1;
}

Graph mask_to_graph(Mask mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (Mask{1} << pair_bit(i, j))) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::vector<Mask> enumerate_masks(int n, bool connected_only) {
    if (n < 1 || n > 7) throw ValidationError("enumerate_graphs: n must be in [1,7]");
    std::vector<Mask> level{0}; // n = 1
    for (int t = 2; t <= n; ++t) {
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(t);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::unordered_set<Mask> seen;
        std::vector<Mask> next;
        const int subset_count = 1 << (t - 1);
        for (Mask base : level) {
            const int start = connected_only ? 1 : 0; // new vertex must attach
            for (int subset = start; subset < subset_count; ++subset) {
                Mask mask = base;
                for (int i = 0; i < t - 1; ++i)
                    if (subset & (1 << i)) mask |= Mask{1} << pair_bit(i, t - 1);
                const Mask canon = canonical_mask(mask, t, perms);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    if (connected_only && n >= 2) {
        // augmentation with a non-empty subset keeps connectivity, so this
        // filter only matters for masks inherited from lower levels
        std::vector<Mask> filtered;
        for (Mask m : level)
            if (mask_connected(m, n)) filtered.push_back(m);
        level = std::move(filtered);
    }
    return level;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    std::vector<Graph> out;
    for (Mask m : enumerate_masks(n, connected_only)) out.push_back(mask_to_graph(m, n));
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(int n_max, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto level = enumerate_graphs(n, connected_only);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace containment
