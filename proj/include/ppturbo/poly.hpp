#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppturbo {

// Thrown when a coefficient set does not define a bijection on {0,...,L-1}.
struct NotBijectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial q0 + q1*x + q2*x^2 + q3*x^3 with coefficients reduced mod L.
struct PolyModL {
    std::uint64_t modulus = 2;
    std::uint64_t q0 = 0, q1 = 0, q2 = 0, q3 = 0;

    PolyModL() = default;
    PolyModL(std::uint64_t L, std::uint64_t a0, std::uint64_t a1,
             std::uint64_t a2, std::uint64_t a3);

    // Largest index k with qk != 0, or 0 for the zero polynomial.
    int degree() const;

    bool operator==(const PolyModL&) const = default;
};

// Lexicographic order on (q1, q2, q3); used for canonical representatives
// and tie-breaking. Both operands must share a modulus.
bool lex_less(const PolyModL& a, const PolyModL& b);

struct Permutation {
    std::vector<std::uint32_t> forward;

    std::uint64_t length() const { return forward.size(); }
    bool operator==(const Permutation&) const = default;
};

// (q0 + q1*x + q2*x^2 + q3*x^3) mod L, Horner form; no intermediate
// overflow for L up to 2^21.
std::uint64_t eval_poly(const PolyModL& p, std::uint64_t x);

// Evaluates p at every point; throws NotBijectiveError if the map is not
// a bijection.
Permutation as_permutation(const PolyModL& p);

bool is_permutation_polynomial(const PolyModL& p);

// (n(n+1)/2) mod 3, always in {0, 1}; equals 1 iff n = 1 (mod 3).
unsigned triangular_class(std::uint64_t n);

// All degree-<=3 polynomials with q0 = 0 evaluating to 0 everywhere,
// including the zero polynomial. Size is gcd(L,6)*gcd(L,2). Generated
// from the closed forms, sorted by lex_less.
std::vector<PolyModL> npp_enumerate(std::uint64_t L);

// The degree-<=2 subset: the zero polynomial, plus (L/2)x + (L/2)x^2 for
// even L. Size gcd(L,2).
std::vector<PolyModL> npp_enumerate_deg2(std::uint64_t L);

// True iff p1 and p2 induce the same permutation, decided by the
// NPP-difference test. Throws std::invalid_argument on modulus mismatch.
bool equivalent(const PolyModL& p1, const PolyModL& p2);

// Minimum degree() over the equivalence class of p.
int effective_degree(const PolyModL& p);

// The class member with lexicographically smallest (q1, q2, q3), with the
// class taken under the given null-polynomial set.
PolyModL canonical_representative(const PolyModL& p,
                                  const std::vector<PolyModL>& npps);

Permutation inverse_permutation(const Permutation& perm);

// Text form: monomials joined by '+', ascending degree, e.g.
// "3x+8x^2+16x^3"; zero coefficients omitted; unit coefficients printed
// as bare "x"/"x^2"/"x^3"; the zero polynomial prints "0".
std::string to_string(const PolyModL& p);

// Parses the text form back; accepts optional spaces and "x^1".
// Throws std::invalid_argument on malformed input.
PolyModL parse_poly(const std::string& text, std::uint64_t L);

}  // namespace ppturbo
