#include "ppturbo/spread.hpp"

#include <limits>

namespace ppturbo {

std::uint64_t circular_distance(std::uint64_t a, std::uint64_t b,
                                std::uint64_t L) {
    if (a >= L || b >= L)
        throw std::invalid_argument("circular_distance: argument out of range");
    const std::uint64_t fwd = (a + L - b) % L;
    const std::uint64_t bwd = (b + L - a) % L;
    return fwd < bwd ? fwd : bwd;
}

std::uint64_t lee_point_distance(std::uint32_t i, std::uint32_t j,
                                 const Permutation& perm) {
    if (i == j) throw std::invalid_argument("lee_point_distance: i == j");
    const std::uint64_t L = perm.length();
    return circular_distance(i, j, L) +
           circular_distance(perm.forward[i], perm.forward[j], L);
}

SpreadResult spread_D(const Permutation& perm) {
    const std::uint32_t L = static_cast<std::uint32_t>(perm.length());
    if (L < 2) throw std::invalid_argument("spread_D: L must be >= 2");
    SpreadResult res;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint32_t i = 0; i + 1 < L; ++i) {
        for (std::uint32_t j = i + 1; j < L; ++j) {
            const std::uint64_t d = lee_point_distance(i, j, perm);
            if (d < best) {
                best = d;
                res.witness = {i, j};
            }
        }
    }
    res.d_value = static_cast<int>(best);
    return res;
}

namespace detail {

int spread_at_least(const Permutation& perm, int threshold) {
    const std::uint32_t L = static_cast<std::uint32_t>(perm.length());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint32_t i = 0; i + 1 < L; ++i) {
        const std::uint32_t pi = perm.forward[i];
        for (std::uint32_t j = i + 1; j < L; ++j) {
            const std::uint32_t d1 = std::min(j - i, L - (j - i));
            if (d1 >= best) continue;
            const std::uint32_t pj = perm.forward[j];
            const std::uint32_t diff = pi < pj ? pj - pi : pi - pj;
            const std::uint64_t d = d1 + std::min(diff, L - diff);
            if (d < best) {
                best = d;
                if (best < static_cast<std::uint64_t>(threshold))
                    return threshold - 1;
            }
        }
    }
    return static_cast<int>(best);
}

}  // namespace detail

}  // namespace ppturbo
