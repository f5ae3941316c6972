#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "ppturbo/poly.hpp"

namespace ppturbo {

// Component RSC code G = [1, 15/13] (octal), memory 3, as in LTE.
//
// Tap masks store the coefficient of D^k at bit k. LTE's octal digits are
// read with the D^0 coefficient as the most significant bit, so octal 13
// (binary 1011 MSB-first) is feedback 1 + D^2 + D^3 and octal 15 (1101) is
// forward 1 + D + D^3. The opposite bit order silently changes every
// spectrum, hence the explicit masks below.
struct RscSpec {
    unsigned memory = 3;
    unsigned feedback_taps = 0b1101;  // 1 + D^2 + D^3  (octal 13)
    unsigned forward_taps = 0b1011;   // 1 + D + D^3    (octal 15)
};

namespace rsc {

inline unsigned taps_parity(unsigned v) {
    return static_cast<unsigned>(std::popcount(v)) & 1u;
}

// State bit k holds input-after-feedback a_{t-1-k}.
inline unsigned feedback(const RscSpec& g, unsigned s) {
    return taps_parity(s & (g.feedback_taps >> 1));
}

inline unsigned step_input(const RscSpec& g, unsigned s, unsigned x) {
    return x ^ feedback(g, s);
}

inline unsigned parity_of(const RscSpec& g, unsigned s, unsigned a) {
    return (a & g.forward_taps & 1u) ^ taps_parity(s & (g.forward_taps >> 1));
}

inline unsigned next_state(const RscSpec& g, unsigned s, unsigned a) {
    return ((s << 1) | a) & ((1u << g.memory) - 1u);
}

}  // namespace rsc

struct RscOutput {
    std::vector<std::uint8_t> parity;    // one bit per info bit
    std::array<std::uint8_t, 3> tail_sys;  // forced termination inputs
    std::array<std::uint8_t, 3> tail_par;  // parities during termination
};

// Encodes from the zero state; three termination cycles feed the feedback
// value back as input, driving the register to zero.
RscOutput rsc_encode_terminated(const std::vector<std::uint8_t>& info,
                                const RscSpec& spec = {});

struct TurboCodeword {
    std::vector<std::uint8_t> systematic;
    std::vector<std::uint8_t> parity1;
    std::vector<std::uint8_t> parity2;
    // Encoder 1 (x1,z1)x3 first, then encoder 2 (x2,z2)x3.
    std::array<std::uint8_t, 12> tail;
};

// Parallel concatenation; the second encoder reads info[perm[k]] at time k.
TurboCodeword turbo_encode(const std::vector<std::uint8_t>& info,
                           const Permutation& perm, const RscSpec& spec = {});

std::uint64_t codeword_weight(const TurboCodeword& cw);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// L / (3L + 12), reduced.
Rational code_rate(std::uint64_t L);

}  // namespace ppturbo
