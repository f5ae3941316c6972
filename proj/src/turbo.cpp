#include "ppturbo/turbo.hpp"

#include <numeric>

namespace ppturbo {

RscOutput rsc_encode_terminated(const std::vector<std::uint8_t>& info,
                                const RscSpec& spec) {
    if (info.empty())
        throw std::invalid_argument("rsc_encode_terminated: empty input");
    RscOutput out;
    out.parity.resize(info.size());
    unsigned s = 0;
    for (std::size_t k = 0; k < info.size(); ++k) {
        const unsigned a = rsc::step_input(spec, s, info[k] & 1u);
        out.parity[k] = static_cast<std::uint8_t>(rsc::parity_of(spec, s, a));
        s = rsc::next_state(spec, s, a);
    }
    for (int t = 0; t < 3; ++t) {
        const unsigned x = rsc::feedback(spec, s);  // makes a = 0
        out.tail_sys[t] = static_cast<std::uint8_t>(x);
        out.tail_par[t] = static_cast<std::uint8_t>(rsc::parity_of(spec, s, 0));
        s = rsc::next_state(spec, s, 0);
    }
    return out;
}

TurboCodeword turbo_encode(const std::vector<std::uint8_t>& info,
                           const Permutation& perm, const RscSpec& spec) {
    if (info.size() != perm.length())
        throw std::invalid_argument("turbo_encode: info/permutation length mismatch");
    std::vector<std::uint8_t> interleaved(info.size());
    for (std::size_t k = 0; k < info.size(); ++k)
        interleaved[k] = info[perm.forward[k]];

    const RscOutput e1 = rsc_encode_terminated(info, spec);
    const RscOutput e2 = rsc_encode_terminated(interleaved, spec);

    TurboCodeword cw;
    cw.systematic = info;
    cw.parity1 = e1.parity;
    cw.parity2 = e2.parity;
    for (int t = 0; t < 3; ++t) {
        cw.tail[2 * t] = e1.tail_sys[t];
        cw.tail[2 * t + 1] = e1.tail_par[t];
        cw.tail[6 + 2 * t] = e2.tail_sys[t];
        cw.tail[6 + 2 * t + 1] = e2.tail_par[t];
    }
    return cw;
}

std::uint64_t codeword_weight(const TurboCodeword& cw) {
    std::uint64_t w = 0;
    for (auto b : cw.systematic) w += b & 1u;
    for (auto b : cw.parity1) w += b & 1u;
    for (auto b : cw.parity2) w += b & 1u;
    for (auto b : cw.tail) w += b & 1u;
    return w;
}

Rational code_rate(std::uint64_t L) {
    if (L < 1) throw std::invalid_argument("code_rate: L must be >= 1");
    const std::int64_t num = static_cast<std::int64_t>(L);
    const std::int64_t den = 3 * num + 12;
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

}  // namespace ppturbo
