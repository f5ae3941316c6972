#include "ppturbo/tub.hpp"

#include <cmath>

namespace ppturbo {

namespace {

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

template <typename TermFn>
BoundResult accumulate(const DistanceSpectrum& spec, std::uint64_t L,
                       const Rational& rc, double snr_db, TermFn term) {
    if (L < 1) throw std::invalid_argument("tub: L must be >= 1");
    KahanSum ber, fer;
    for (const SpectrumLine& ln : spec.lines) {
        const double t = term(ln.d);
        ber.add(static_cast<double>(ln.info_weight) / static_cast<double>(L) * t);
        fer.add(static_cast<double>(ln.mult) * t);
    }
    BoundResult res;
    res.tub_ber = 0.5 * ber.sum;
    res.tub_fer = 0.5 * fer.sum;
    res.snr_db = snr_db;
    res.rc = rc;
    res.terms_used = static_cast<int>(spec.lines.size());
    return res;
}

}  // namespace

BoundResult tub_awgn(const DistanceSpectrum& spec, std::uint64_t L,
                     const Rational& rc, double snr_db) {
    const double s = std::pow(10.0, snr_db / 10.0);
    const double rcs = rc.to_double() * s;
    return accumulate(spec, L, rc, snr_db, [rcs](int d) {
        return std::erfc(std::sqrt(static_cast<double>(d) * rcs));
    });
}

BoundResult tub_rayleigh(const DistanceSpectrum& spec, std::uint64_t L,
                         const Rational& rc, double snr_db) {
    const double s = std::pow(10.0, snr_db / 10.0);
    const double base = 1.0 / (1.0 + rc.to_double() * s);
    return accumulate(spec, L, rc, snr_db, [base](int d) {
        return std::pow(base, static_cast<double>(d));
    });
}

BoundResult tub(Channel ch, const DistanceSpectrum& spec, std::uint64_t L,
                const Rational& rc, double snr_db) {
    return ch == Channel::Awgn ? tub_awgn(spec, L, rc, snr_db)
                               : tub_rayleigh(spec, L, rc, snr_db);
}

}  // namespace ppturbo
