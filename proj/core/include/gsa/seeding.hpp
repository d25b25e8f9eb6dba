// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace gsa {

// SplitMix64 finalizer. Used for all seed derivation so that results are
// identical across platforms and standard-library implementations.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic combination of a base seed and a stream index.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(splitmix64(base) ^ (stream + 0x9E3779B97F4A7C15ULL));
}

// Minimal counter-based generator over the SplitMix64 stream. Unlike the
// standard engines its output is pinned by this header, which keeps seeded
// subsampling bit-reproducible everywhere.
class SmallRng {
public:
    explicit SmallRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) via the multiply-shift reduction.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace gsa
