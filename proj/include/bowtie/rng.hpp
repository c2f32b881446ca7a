#pragma once

// Deterministic randomness utilities.
//
// Reproducibility contract: the same root seed must produce bit-identical
// results on every platform.  std::mt19937_64 is bit-exact per the standard,
// but the std:: distributions are implementation-defined, so sampling is
// hand-rolled here (rejection sampling + Fisher-Yates).  Per-stage seeds are
// derived from the root seed with splitmix64 over a stage tag, so adding a
// stage never perturbs the streams of existing ones.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace bowtie {

// SplitMix64 step (Steele, Lea, Flood) — used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// derive_seed(root, tag, index): the documented per-stage derivation.
// Every random stage of the pipeline (colouring, path search, rep #i of an
// experiment, ...) draws its seed from the one root seed through this.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stage_tag,
                                 std::uint64_t index = 0) {
    return splitmix64(splitmix64(root ^ fnv1a64(stage_tag)) + index);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, bound) by rejection — portable, unlike
// std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

template <typename T>
void shuffle_in_place(Rng& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

// k distinct values from [0, n), sorted ascending (partial Fisher-Yates).
inline std::vector<int> sample_distinct(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(
                                uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bowtie
