#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ppturbo/poly.hpp"

using namespace ppturbo;

namespace {

// Oracle: scan all L^3 coefficient triples for null polynomials.
std::vector<PolyModL> npp_exhaustive(std::uint64_t L) {
    std::vector<PolyModL> out;
    for (std::uint64_t q1 = 0; q1 < L; ++q1)
        for (std::uint64_t q2 = 0; q2 < L; ++q2)
            for (std::uint64_t q3 = 0; q3 < L; ++q3) {
                const PolyModL p(L, 0, q1, q2, q3);
                bool null = true;
                for (std::uint64_t x = 0; x < L && null; ++x)
                    null = eval_poly(p, x) == 0;
                if (null) out.push_back(p);
            }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("coefficients reduce mod L") {
    const PolyModL p(10, 12, 13, 25, 30);
    CHECK(p.q0 == 2);
    CHECK(p.q1 == 3);
    CHECK(p.q2 == 5);
    CHECK(p.q3 == 0);
    CHECK(p.degree() == 2);
    CHECK(PolyModL(7, 0, 0, 0, 0).degree() == 0);
}

TEST_CASE("eval matches direct computation") {
    const PolyModL p(40, 0, 13, 10, 0);
    for (std::uint64_t x = 0; x < 40; ++x)
        CHECK(eval_poly(p, x) == (13 * x + 10 * x * x) % 40);
    // large modulus: no overflow up to 2^21
    const std::uint64_t L = 1u << 21;
    const PolyModL big(L, 1, L - 1, L - 2, L - 3);
    const std::uint64_t x = L - 5;
    // reference via __int128
    unsigned __int128 v = 1;
    v += (unsigned __int128)(L - 1) * x;
    v += (unsigned __int128)(L - 2) * x % L * x;
    v += (unsigned __int128)(L - 3) * x % L * x % L * x;
    CHECK(eval_poly(big, x) == (std::uint64_t)(v % L));
}

TEST_CASE("triangular_class") {
    for (std::uint64_t n = 0; n < 50; ++n) {
        CHECK(triangular_class(n) == (n * (n + 1) / 2) % 3 % 2);
        CHECK(triangular_class(n) == (n % 3 == 1 ? 1u : 0u));
    }
}

TEST_CASE("npp closed form equals exhaustive scan") {
    for (std::uint64_t L : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18,
                            20, 21, 24, 27, 30}) {
        CAPTURE(L);
        const auto closed = npp_enumerate(L);
        const auto oracle = npp_exhaustive(L);
        CHECK(closed == oracle);
        CHECK(closed.size() == std::gcd(L, std::uint64_t{6}) *
                                   std::gcd(L, std::uint64_t{2}));
        CHECK(std::is_sorted(closed.begin(), closed.end(), lex_less));
    }
}

TEST_CASE("degree-2 npp subset") {
    CHECK(npp_enumerate_deg2(9) ==
          std::vector<PolyModL>{PolyModL(9, 0, 0, 0, 0)});
    const auto e = npp_enumerate_deg2(8);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == PolyModL(8, 0, 0, 0, 0));
    CHECK(e[1] == PolyModL(8, 0, 4, 4, 0));
    // every member really is null
    for (std::uint64_t L : {2, 4, 6, 10, 40}) {
        for (const auto& n : npp_enumerate_deg2(L)) {
            CHECK(n.degree() <= 2);
            for (std::uint64_t x = 0; x < L; ++x) CHECK(eval_poly(n, x) == 0);
        }
    }
}

TEST_CASE("as_permutation and bijectivity") {
    const Permutation perm = as_permutation(PolyModL(40, 0, 13, 10, 0));
    REQUIRE(perm.length() == 40);
    std::set<std::uint32_t> seen(perm.forward.begin(), perm.forward.end());
    CHECK(seen.size() == 40);
    CHECK(perm.forward[0] == 0);
    CHECK(perm.forward[1] == 23);

    CHECK(is_permutation_polynomial(PolyModL(40, 0, 13, 10, 0)));
    CHECK_FALSE(is_permutation_polynomial(PolyModL(8, 0, 2, 0, 0)));
    CHECK_THROWS_AS((void)as_permutation(PolyModL(8, 0, 2, 0, 0)),
                    NotBijectiveError);
    // q0 shifts the permutation but keeps bijectivity
    CHECK(is_permutation_polynomial(PolyModL(40, 7, 13, 10, 0)));
}

TEST_CASE("inverse_permutation") {
    const Permutation perm = as_permutation(PolyModL(48, 0, 7, 36, 0));
    const Permutation inv = inverse_permutation(perm);
    for (std::uint32_t i = 0; i < 48; ++i) {
        CHECK(inv.forward[perm.forward[i]] == i);
        CHECK(perm.forward[inv.forward[i]] == i);
    }
}

TEST_CASE("equivalence and effective degree") {
    // 3x+8x^2+16x^3 mod 40 differs from a quadratic by an NPP? It should
    // at least be equivalent to itself plus any NPP.
    const PolyModL p(40, 0, 3, 8, 16);
    for (const auto& n : npp_enumerate(40)) {
        const PolyModL q(40, 0, p.q1 + n.q1, p.q2 + n.q2, p.q3 + n.q3);
        CHECK(equivalent(p, q));
    }
    CHECK_FALSE(equivalent(p, PolyModL(40, 0, 13, 10, 0)));
    CHECK_THROWS_AS((void)equivalent(p, PolyModL(20, 0, 3, 8, 16)),
                    std::invalid_argument);

    // 2x + 3x^2 + 3x^3 mod 9: x^3-term removable? effective degree via class
    for (std::uint64_t L : {8, 9, 12, 40}) {
        const auto npps = npp_enumerate(L);
        for (const auto& base :
             {PolyModL(L, 0, 1, 0, 0), PolyModL(L, 0, 3, 0, L / 2)}) {
            int best = base.degree();
            for (const auto& n : npps)
                best = std::min(best, PolyModL(L, 0, base.q1 + n.q1,
                                               base.q2 + n.q2, base.q3 + n.q3)
                                          .degree());
            CHECK(effective_degree(base) == best);
        }
    }
}

TEST_CASE("canonical representative is minimal and equivalent") {
    const auto npps = npp_enumerate(40);
    const PolyModL p(40, 0, 23, 28, 36);
    const PolyModL c = canonical_representative(p, npps);
    CHECK(equivalent(p, c));
    for (const auto& n : npps) {
        const PolyModL member(40, 0, p.q1 + n.q1, p.q2 + n.q2, p.q3 + n.q3);
        CHECK_FALSE(lex_less(member, c));
    }
}

TEST_CASE("to_string forms") {
    CHECK(to_string(PolyModL(40, 0, 3, 8, 16)) == "3x+8x^2+16x^3");
    CHECK(to_string(PolyModL(40, 0, 13, 10, 0)) == "13x+10x^2");
    CHECK(to_string(PolyModL(40, 0, 1, 0, 1)) == "x+x^3");
    CHECK(to_string(PolyModL(40, 0, 0, 0, 0)) == "0");
    CHECK(to_string(PolyModL(40, 5, 0, 2, 0)) == "5+2x^2");
    CHECK(to_string(PolyModL(120, 0, 5, 0, 48)) == "5x+48x^3");
}

TEST_CASE("parse round trip") {
    for (const char* s : {"3x+8x^2+16x^3", "13x+10x^2", "x+x^3", "0",
                          "5+2x^2", "101x+204x^2"}) {
        const PolyModL p = parse_poly(s, 272);
        CHECK(to_string(p) == s);
    }
    CHECK(parse_poly(" 13 x + 10 x^2 ", 40) == PolyModL(40, 0, 13, 10, 0));
    CHECK(parse_poly("13x^1+10x^2", 40) == PolyModL(40, 0, 13, 10, 0));
    CHECK(parse_poly("53x", 40) == PolyModL(40, 0, 13, 0, 0));
    CHECK_THROWS_AS((void)parse_poly("3y+1", 40), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_poly("3x+", 40), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_poly("x^4", 40), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_poly("", 40), std::invalid_argument);
}
