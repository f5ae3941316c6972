#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ppturbo/poly.hpp"
#include "ppturbo/turbo.hpp"

using namespace ppturbo;

namespace {

// Independent reference: explicit shift register r[0..2], r[k] = a_{t-1-k}.
// Feedback 1 + D^2 + D^3, forward 1 + D + D^3 (G = [1, 15/13] octal).
struct RefRsc {
    std::uint8_t r[3] = {0, 0, 0};

    std::uint8_t fb() const { return r[1] ^ r[2]; }
    // returns parity; shifts the register
    std::uint8_t clock(std::uint8_t x) {
        const std::uint8_t a = x ^ fb();
        const std::uint8_t z = a ^ r[0] ^ r[2];
        r[2] = r[1];
        r[1] = r[0];
        r[0] = a;
        return z;
    }
};

std::vector<std::uint8_t> random_bits(std::size_t n, std::mt19937& rng) {
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1u);
    return v;
}

}  // namespace

TEST_CASE("rsc encoder matches the shift-register reference") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const auto info = random_bits(1 + rng() % 60, rng);
        const RscOutput out = rsc_encode_terminated(info);
        REQUIRE(out.parity.size() == info.size());

        RefRsc ref;
        for (std::size_t k = 0; k < info.size(); ++k)
            CHECK(out.parity[k] == ref.clock(info[k]));
        for (int k = 0; k < 3; ++k) {
            const std::uint8_t x = ref.fb();  // termination input
            CHECK(out.tail_sys[k] == x);
            CHECK(out.tail_par[k] == ref.clock(x));
        }
        CHECK((ref.r[0] | ref.r[1] | ref.r[2]) == 0);  // back at zero
    }
}

TEST_CASE("termination always reaches the zero state") {
    // run each of the 8 states through the 3 forced cycles
    const RscSpec g{};
    for (unsigned s = 0; s < 8; ++s) {
        unsigned cur = s;
        for (int k = 0; k < 3; ++k)
            cur = rsc::next_state(g, cur, 0);  // a = x ^ fb = 0 when forced
        CHECK(cur == 0);
    }
}

TEST_CASE("impulse response of the feedback encoder is periodic 7") {
    // single 1 into an unterminated register: state repeats with period 7
    const RscSpec g{};
    unsigned s = rsc::next_state(g, 0, 1);
    std::vector<unsigned> states;
    for (int k = 0; k < 21; ++k) {
        states.push_back(s);
        s = rsc::next_state(g, s, rsc::step_input(g, s, 0));  // zero input
    }
    for (int k = 0; k + 7 < static_cast<int>(states.size()); ++k)
        CHECK(states[k] == states[k + 7]);
}

TEST_CASE("turbo codeword layout and weight") {
    const Permutation perm = as_permutation(parse_poly("13x+10x^2", 40));
    std::mt19937 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const auto info = random_bits(40, rng);
        const TurboCodeword cw = turbo_encode(info, perm);
        CHECK(cw.systematic == info);

        const RscOutput e1 = rsc_encode_terminated(info);
        CHECK(cw.parity1 == e1.parity);

        std::vector<std::uint8_t> interleaved(40);
        for (std::size_t k = 0; k < 40; ++k)
            interleaved[k] = info[perm.forward[k]];
        const RscOutput e2 = rsc_encode_terminated(interleaved);
        CHECK(cw.parity2 == e2.parity);

        // tail: (x1,z1)x3 then (x2,z2)x3
        for (int k = 0; k < 3; ++k) {
            CHECK(cw.tail[2 * k] == e1.tail_sys[k]);
            CHECK(cw.tail[2 * k + 1] == e1.tail_par[k]);
            CHECK(cw.tail[6 + 2 * k] == e2.tail_sys[k]);
            CHECK(cw.tail[6 + 2 * k + 1] == e2.tail_par[k]);
        }

        std::uint64_t w = 0;
        for (auto b : cw.systematic) w += b;
        for (auto b : cw.parity1) w += b;
        for (auto b : cw.parity2) w += b;
        for (auto b : cw.tail) w += b;
        CHECK(codeword_weight(cw) == w);
    }
}

TEST_CASE("all-zero input gives the all-zero codeword") {
    const Permutation perm = as_permutation(parse_poly("7x+16x^2", 64));
    const TurboCodeword cw = turbo_encode(std::vector<std::uint8_t>(64, 0), perm);
    CHECK(codeword_weight(cw) == 0);
}

TEST_CASE("code rate L/(3L+12) reduced") {
    CHECK(code_rate(40) == Rational{10, 33});
    CHECK(code_rate(48) == Rational{4, 13});
    CHECK(code_rate(64) == Rational{16, 51});
    const Rational r = code_rate(120);
    CHECK(r.num * (3 * 120 + 12) == r.den * 120);
    CHECK(std::gcd(r.num, r.den) == 1);
}
