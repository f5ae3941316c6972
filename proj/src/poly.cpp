#include "ppturbo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ppturbo {

PolyModL::PolyModL(std::uint64_t L, std::uint64_t a0, std::uint64_t a1,
                   std::uint64_t a2, std::uint64_t a3)
    : modulus(L), q0(a0 % L), q1(a1 % L), q2(a2 % L), q3(a3 % L) {
    if (L < 2) throw std::invalid_argument("modulus must be >= 2");
}

int PolyModL::degree() const {
    if (q3) return 3;
    if (q2) return 2;
    if (q1) return 1;
    return 0;
}

bool lex_less(const PolyModL& a, const PolyModL& b) {
    if (a.q1 != b.q1) return a.q1 < b.q1;
    if (a.q2 != b.q2) return a.q2 < b.q2;
    return a.q3 < b.q3;
}

std::uint64_t eval_poly(const PolyModL& p, std::uint64_t x) {
    if (x >= p.modulus) throw std::invalid_argument("eval_poly: x out of range");
    const std::uint64_t L = p.modulus;
    // Horner with reduction after each step: operands stay below L^2 <= 2^42
    // for L <= 2^21.
    std::uint64_t acc = p.q3;
    acc = (acc * x + p.q2) % L;
    acc = (acc * x + p.q1) % L;
    acc = (acc * x + p.q0) % L;
    return acc;
}

Permutation as_permutation(const PolyModL& p) {
    const std::uint64_t L = p.modulus;
    Permutation perm;
    perm.forward.resize(L);
    std::vector<bool> seen(L, false);
    for (std::uint64_t x = 0; x < L; ++x) {
        const std::uint64_t y = eval_poly(p, x);
        if (seen[y])
            throw NotBijectiveError("polynomial " + to_string(p) + " mod " +
                                    std::to_string(L) + " is not a permutation");
        seen[y] = true;
        perm.forward[x] = static_cast<std::uint32_t>(y);
    }
    return perm;
}

bool is_permutation_polynomial(const PolyModL& p) {
    const std::uint64_t L = p.modulus;
    std::vector<bool> seen(L, false);
    for (std::uint64_t x = 0; x < L; ++x) {
        const std::uint64_t y = eval_poly(p, x);
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

unsigned triangular_class(std::uint64_t n) {
    // n(n+1)/2 mod 3 has period 3 in n: 0, 1, 0.
    return n % 3 == 1 ? 1u : 0u;
}

std::vector<PolyModL> npp_enumerate(std::uint64_t L) {
    if (L < 2) throw std::invalid_argument("modulus must be >= 2");
    const std::uint64_t g6 = std::gcd(L, std::uint64_t{6});
    const std::uint64_t g2 = std::gcd(L, std::uint64_t{2});
    std::vector<PolyModL> out;
    out.reserve(g6 * g2);
    // q3 runs over the solutions of 6*q3 = 0, q2 over those of 2*q2 = 0,
    // and q1 = -(q2 + q3) closes each triple; this is exactly the zero
    // polynomial, the quadratic null polynomial and the ten cubic cases.
    for (std::uint64_t i = 0; i < g6; ++i) {
        const std::uint64_t q3 = L / g6 * i;
        for (std::uint64_t j = 0; j < g2; ++j) {
            const std::uint64_t q2 = L / g2 * j;
            const std::uint64_t q1 = (2 * L - q2 - q3) % L;
            out.emplace_back(L, 0, q1, q2, q3);
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<PolyModL> npp_enumerate_deg2(std::uint64_t L) {
    std::vector<PolyModL> out;
    out.emplace_back(L, 0, 0, 0, 0);
    if (L % 2 == 0) out.emplace_back(L, 0, L / 2, L / 2, 0);
    return out;
}

namespace {

PolyModL add_npp(const PolyModL& p, const PolyModL& n) {
    return PolyModL(p.modulus, p.q0, p.q1 + n.q1, p.q2 + n.q2, p.q3 + n.q3);
}

}  // namespace

bool equivalent(const PolyModL& p1, const PolyModL& p2) {
    if (p1.modulus != p2.modulus)
        throw std::invalid_argument("equivalent: modulus mismatch");
    if (p1.q0 != p2.q0) return false;
    const std::uint64_t L = p1.modulus;
    const PolyModL diff(L, 0, L + p1.q1 - p2.q1, L + p1.q2 - p2.q2,
                        L + p1.q3 - p2.q3);
    for (const PolyModL& n : npp_enumerate(L))
        if (diff == n) return true;
    return false;
}

int effective_degree(const PolyModL& p) {
    int best = p.degree();
    for (const PolyModL& n : npp_enumerate(p.modulus))
        best = std::min(best, add_npp(p, n).degree());
    return best;
}

PolyModL canonical_representative(const PolyModL& p,
                                  const std::vector<PolyModL>& npps) {
    PolyModL best = p;
    for (const PolyModL& n : npps) {
        const PolyModL cand = add_npp(p, n);
        if (lex_less(cand, best)) best = cand;
    }
    return best;
}

Permutation inverse_permutation(const Permutation& perm) {
    Permutation inv;
    inv.forward.resize(perm.forward.size());
    for (std::uint32_t x = 0; x < perm.forward.size(); ++x)
        inv.forward[perm.forward[x]] = x;
    return inv;
}

std::string to_string(const PolyModL& p) {
    std::string out;
    auto term = [&out](std::uint64_t coeff, int deg) {
        if (coeff == 0) return;
        if (!out.empty()) out += '+';
        if (coeff != 1 || deg == 0) out += std::to_string(coeff);
        if (deg >= 1) out += 'x';
        if (deg >= 2) out += '^' + std::to_string(deg);
    };
    term(p.q0, 0);
    term(p.q1, 1);
    term(p.q2, 2);
    term(p.q3, 3);
    if (out.empty()) out = "0";
    return out;
}

PolyModL parse_poly(const std::string& text, std::uint64_t L) {
    if (L < 2) throw std::invalid_argument("modulus must be >= 2");
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial string");
    if (s.front() == '+' || s.back() == '+' ||
        s.find("++") != std::string::npos)
        throw std::invalid_argument("malformed polynomial: '" + text + "'");

    std::uint64_t q[4] = {0, 0, 0, 0};
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        const std::string tok = s.substr(pos, end - pos);
        if (tok.empty())
            throw std::invalid_argument("malformed polynomial: '" + text + "'");

        std::size_t i = 0;
        std::uint64_t coeff = 1;
        bool have_digits = false;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            ++i;
        if (i > 0) {
            coeff = std::stoull(tok.substr(0, i));
            have_digits = true;
        }
        int deg = 0;
        if (i < tok.size()) {
            if (tok[i] != 'x')
                throw std::invalid_argument("malformed term '" + tok + "'");
            ++i;
            deg = 1;
            if (i < tok.size()) {
                if (tok[i] != '^' || i + 1 >= tok.size())
                    throw std::invalid_argument("malformed term '" + tok + "'");
                const std::string exp = tok.substr(i + 1);
                if (exp.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("malformed exponent in '" + tok + "'");
                deg = std::stoi(exp);
                i = tok.size();
            }
        } else if (!have_digits) {
            throw std::invalid_argument("malformed term '" + tok + "'");
        }
        if (deg > 3)
            throw std::invalid_argument("degree above 3 in '" + tok + "'");
        q[deg] = (q[deg] + coeff) % L;
        pos = end + 1;
    }
    return PolyModL(L, q[0], q[1], q[2], q[3]);
}

}  // namespace ppturbo
