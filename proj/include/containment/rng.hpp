#pragma once

#include <cstdint>

namespace containment {

// Seed used by every tool when the user does not pass one.
inline constexpr std::uint64_t kDefaultSeed = 1729;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream rule: the stream for index i under master seed s is
// Rng(mix_seed(s, i)). Nested scopes chain the rule, e.g.
// mix_seed(mix_seed(master, cell), trial). All artifacts that claim
// byte-level reproducibility derive their seeds this way.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master ^ (0xd1b54a32d192ed03ULL * (index + 1));
    std::uint64_t h = splitmix64(x);
    h ^= splitmix64(x);
    return h;
}

// xoshiro256** seeded from a 64-bit value via splitmix64. The std engines
// are portable but the std distributions are not, so the draws below are
// implemented by hand and are bit-identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) {
        for (auto& word : s_) word = splitmix64(seed);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0,n), unbiased (rejection sampling).
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace containment
