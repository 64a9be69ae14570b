#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hpt {

// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard;
// the bounded-draw and shuffle logic live here (std distributions are
// implementation-defined and would break byte-identical reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), rejection sampled.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return (engine_() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
}  // namespace detail

// Sub-seed derivation: every stage of a pipeline draws its own seed from the
// master seed and a stage tag, so reordering independent stages cannot shift
// the random stream. Documented in the README; recorded in manifests.
inline std::uint64_t sub_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
    return detail::splitmix64(master ^ detail::fnv1a(tag) ^ (0x5851f42d4c957f2dULL * index));
}

}  // namespace hpt
