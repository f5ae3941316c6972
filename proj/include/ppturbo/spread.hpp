#pragma once

#include <cstdint>
#include <utility>

#include "ppturbo/poly.hpp"

namespace ppturbo {

struct SpreadResult {
    int d_value = 0;
    // Lexicographically smallest pair (i, j), i < j, attaining d_value.
    std::pair<std::uint32_t, std::uint32_t> witness{0, 0};
};

// min((a-b) mod L, (b-a) mod L); at most floor(L/2).
std::uint64_t circular_distance(std::uint64_t a, std::uint64_t b,
                                std::uint64_t L);

// Lee distance between interleaver-code points (i, perm[i]) and (j, perm[j]).
// Throws std::invalid_argument when i == j.
std::uint64_t lee_point_distance(std::uint32_t i, std::uint32_t j,
                                 const Permutation& perm);

// Spreading factor D: exhaustive minimum over all unordered pairs.
SpreadResult spread_D(const Permutation& perm);

namespace detail {
// Minimum pair distance, abandoning a scan as soon as the running minimum
// drops below `threshold`; returns threshold - 1 in that case. Used by the
// search to discard candidates that cannot reach the current best D.
int spread_at_least(const Permutation& perm, int threshold);
}  // namespace detail

}  // namespace ppturbo
