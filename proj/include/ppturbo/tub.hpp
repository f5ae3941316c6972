#pragma once

#include <cstdint>

#include "ppturbo/spectrum.hpp"
#include "ppturbo/turbo.hpp"

namespace ppturbo {

enum class Channel { Awgn, RayleighIndependent };

struct BoundResult {
    double tub_ber = 0.0;
    double tub_fer = 0.0;
    double snr_db = 0.0;
    Rational rc{0, 1};
    int terms_used = 0;
};

// Truncated union bounds for BPSK with SNR taken as Eb/N0 in dB,
// s = 10^(snr_db/10):
//   AWGN:     0.5 * sum (w_i/L) * erfc(sqrt(d_i * rc * s))   (BER)
//             0.5 * sum  N_i    * erfc(sqrt(d_i * rc * s))   (FER)
//   Rayleigh: same sums with (1/(1 + rc*s))^d_i in place of the erfc term.
// Terms are accumulated in ascending d with compensated summation.
BoundResult tub_awgn(const DistanceSpectrum& spec, std::uint64_t L,
                     const Rational& rc, double snr_db);
BoundResult tub_rayleigh(const DistanceSpectrum& spec, std::uint64_t L,
                         const Rational& rc, double snr_db);

BoundResult tub(Channel ch, const DistanceSpectrum& spec, std::uint64_t L,
                const Rational& rc, double snr_db);

}  // namespace ppturbo
