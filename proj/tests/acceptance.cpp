// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Expensive searches are cached so the determinism criterion can
// re-use the 8-worker runs.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ppturbo/poly.hpp"
#include "ppturbo/search.hpp"
#include "ppturbo/spectrum.hpp"
#include "ppturbo/spread.hpp"
#include "ppturbo/tables.hpp"

using namespace ppturbo;

namespace {

int g_failures = 0;

void report(int n, const char* what, bool ok, double secs) {
    std::printf("criterion %2d [%s]: %s (%.1fs)\n", n, what,
                ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// Printed table values carry 4 decimals in the scaled convention, some
// rounded and some truncated; accept the relative tolerance or one unit
// in the last printed digit.
bool value_matches(double got_scaled, double printed) {
    if (std::fabs(got_scaled - printed) <= 1e-4 + 1e-12) return true;
    return printed > 0.0 &&
           std::fabs(got_scaled - printed) / printed <= 5e-4;
}

Permutation random_perm(std::uint64_t L, std::mt19937& rng) {
    Permutation p;
    p.forward.resize(L);
    for (std::uint32_t i = 0; i < L; ++i) p.forward[i] = i;
    std::shuffle(p.forward.begin(), p.forward.end(), rng);
    return p;
}

struct RowKey {
    std::uint64_t L;
    int degree;
    Channel channel;

    bool operator<(const RowKey& o) const {
        return std::tie(L, degree, channel) < std::tie(o.L, o.degree, o.channel);
    }
};

SearchConfig row_config(const GoldenRow& row, int degree, Channel ch, int jobs) {
    SearchConfig cfg;
    cfg.L = row.L;
    cfg.degree = degree;
    cfg.channel = ch;
    cfg.objective = ch == Channel::Awgn ? Objective::MinBer : Objective::MinFer;
    cfg.snr_db = row.snr_db;
    cfg.num_dist = row.num_dist;
    cfg.wu_max = 10;
    cfg.jobs = jobs;
    return cfg;
}

// Results from the 8-worker pass, reused by criteria 4, 7 and 10.
std::map<RowKey, SearchReport> g_runs;

const SearchReport& run_row(const GoldenRow& row, int degree, Channel ch) {
    const RowKey key{row.L, degree, ch};
    auto it = g_runs.find(key);
    if (it == g_runs.end())
        it = g_runs.emplace(key, optimize(row_config(row, degree, ch, 8))).first;
    return it->second;
}

bool check_row(const SearchReport& r, const char* poly, int D, double ber_e7,
               double fer_e5) {
    return to_string(r.winner) == poly && r.d_max == D &&
           value_matches(r.tub_ber * 1e7, ber_e7) &&
           value_matches(r.tub_fer * 1e5, fer_e5);
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. Closed-form NPP enumeration equals the exhaustive scan.
bool criterion1() {
    for (std::uint64_t L : {6, 8, 9, 10, 12, 15, 18, 24, 30, 36}) {
        std::vector<PolyModL> oracle;
        for (std::uint64_t q1 = 0; q1 < L; ++q1)
            for (std::uint64_t q2 = 0; q2 < L; ++q2)
                for (std::uint64_t q3 = 0; q3 < L; ++q3) {
                    const PolyModL p(L, 0, q1, q2, q3);
                    bool null = true;
                    for (std::uint64_t x = 0; x < L && null; ++x)
                        null = eval_poly(p, x) == 0;
                    if (null) oracle.push_back(p);
                }
        std::sort(oracle.begin(), oracle.end(), lex_less);
        if (npp_enumerate(L) != oracle) return false;
        if (oracle.size() != std::gcd(L, std::uint64_t{6}) *
                                 std::gcd(L, std::uint64_t{2}))
            return false;
    }
    return true;
}

// 2. Spread factors of published polynomials.
bool criterion2() {
    const struct {
        const char* poly;
        std::uint64_t L;
        int D;
    } cases[] = {{"13x+10x^2", 40, 4},
                 {"5x+6x^2+12x^3", 48, 6},
                 {"5x+24x^2+48x^3", 64, 8},
                 {"11x+20x^2", 80, 10},
                 {"5x+48x^3", 120, 12}};
    for (const auto& c : cases)
        if (spread_D(as_permutation(parse_poly(c.poly, c.L))).d_value != c.D)
            return false;
    return true;
}

// 3. Event search equals brute force on random permutations.
bool criterion3() {
    std::mt19937 rng(20260823);
    for (std::uint64_t L : {8, 12, 16, 18}) {
        for (int rep = 0; rep < 20; ++rep) {
            const Permutation p = random_perm(L, rng);
            const DistanceSpectrum oracle = brute_force_spectrum(p, 4);
            const DistanceSpectrum got =
                distance_spectrum(p, 4, static_cast<int>(L));
            if (got.lines != oracle.lines) return false;
        }
    }
    return true;
}

// 4. Winner spectrum head of the degree-3, L=64, objective-BER search.
bool criterion4() {
    const SearchReport& r =
        run_row(*golden_row(2, 64), 3, Channel::Awgn);
    const auto& lines = r.winner_spectrum.lines;
    return lines.size() >= 2 && lines[0] == SpectrumLine{15, 1, 1} &&
           lines[1] == SpectrumLine{16, 2, 4};
}

// 5. Table 2 winner rows at desk scale.
bool criterion5() {
    bool ok = true;
    for (std::uint64_t L : {40, 48, 56, 64}) {
        const GoldenRow row = *golden_row(2, L);
        const SearchReport& q = run_row(row, 2, Channel::Awgn);
        const SearchReport& c = run_row(row, 3, Channel::Awgn);
        if (!check_row(q, row.qpp, row.qpp_D, row.qpp_ber_e7, row.qpp_fer_e5)) {
            std::printf("  table 2 L=%llu qpp mismatch: %s\n",
                        (unsigned long long)L, report_csv_row(q).c_str());
            ok = false;
        }
        if (!check_row(c, row.cpp, row.cpp_D, row.cpp_ber_e7, row.cpp_fer_e5)) {
            std::printf("  table 2 L=%llu cpp mismatch: %s\n",
                        (unsigned long long)L, report_csv_row(c).c_str());
            ok = false;
        }
    }
    return ok;
}

// 6. Table 4 Rayleigh subset.
bool criterion6() {
    const GoldenRow r40 = *golden_row(4, 40);
    const GoldenRow r64 = *golden_row(4, 64);
    const SearchReport& q40 = run_row(r40, 2, Channel::RayleighIndependent);
    const SearchReport& c64 = run_row(r64, 3, Channel::RayleighIndependent);
    bool ok = true;
    if (!check_row(q40, "13x+30x^2", r40.qpp_D, 4.0451, 0.6539)) {
        std::printf("  table 4 L=40 qpp mismatch: %s\n",
                    report_csv_row(q40).c_str());
        ok = false;
    }
    if (!check_row(c64, "7x+22x^2+60x^3", r64.cpp_D, 0.1217, 0.0233)) {
        std::printf("  table 4 L=64 cpp mismatch: %s\n",
                    report_csv_row(c64).c_str());
        ok = false;
    }
    return ok;
}

// 7. Optimum counts ("No. pol.") for the rows of criteria 5-6.
bool criterion7() {
    bool ok = true;
    for (std::uint64_t L : {40, 48, 56, 64}) {
        const GoldenRow row = *golden_row(2, L);
        ok = ok &&
             run_row(row, 2, Channel::Awgn).optimum_count ==
                 static_cast<std::uint64_t>(row.qpp_count) &&
             run_row(row, 3, Channel::Awgn).optimum_count ==
                 static_cast<std::uint64_t>(row.cpp_count);
    }
    ok = ok &&
         run_row(*golden_row(4, 40), 2, Channel::RayleighIndependent)
                 .optimum_count == 4 &&
         run_row(*golden_row(4, 64), 3, Channel::RayleighIndependent)
                 .optimum_count == 8;
    return ok;
}

// 8. Table 1 candidate-count ratio identities.
bool criterion8() {
    const struct {
        std::uint64_t L;
        std::uint64_t ratio;
    } cases[] = {{40, 20}, {45, 15}, {48, 8}};
    for (const auto& c : cases) {
        const std::uint64_t g2 = std::gcd(c.L, std::uint64_t{2});
        const std::uint64_t g6 = std::gcd(c.L, std::uint64_t{6});
        const std::uint64_t deg2 = c.L * c.L / g2;
        const std::uint64_t deg3 = c.L * c.L * c.L / (g6 * g2);
        if (deg3 / deg2 != c.ratio || deg3 % deg2 != 0) return false;
        // the enumerator agrees with the closed-form counts
        if (enumerate_candidates(c.L, 2).classes != deg2) return false;
        if (enumerate_candidates(c.L, 3).classes != deg3) return false;
    }
    return true;
}

// 9. Spectrum invariance under permutation inversion.
bool criterion9() {
    std::mt19937 rng(97);
    for (std::uint64_t L : {6, 9, 12, 15, 18}) {
        for (int rep = 0; rep < 10; ++rep) {
            const Permutation p = random_perm(L, rng);
            const DistanceSpectrum a =
                distance_spectrum(p, 4, static_cast<int>(L));
            const DistanceSpectrum b = distance_spectrum(
                inverse_permutation(p), 4, static_cast<int>(L));
            if (a != b) return false;
        }
    }
    return true;
}

// 10. Byte-identical reports at 1 and 8 workers for criteria 4-7.
bool criterion10() {
    for (const auto& [key, r8] : g_runs) {
        GoldenRow row = *golden_row(key.channel == Channel::Awgn ? 2 : 4, key.L);
        const SearchReport r1 =
            optimize(row_config(row, key.degree, key.channel, 1));
        if (report_csv_row(r1) != report_csv_row(r8)) return false;
        if (report_json(r1) != report_json(r8)) return false;
    }
    return true;
}

}  // namespace

int main() {
    const struct {
        int n;
        const char* what;
        bool (*fn)();
    } criteria[] = {
        {1, "npp theorem completeness", criterion1},
        {2, "spread golden values", criterion2},
        {3, "spectrum oracle equivalence", criterion3},
        {4, "winner spectrum head 15/1/1 16/2/4", criterion4},
        {5, "table 2 desk-scale rows", criterion5},
        {6, "table 4 rayleigh subset", criterion6},
        {7, "optimum counts", criterion7},
        {8, "table 1 ratio identities", criterion8},
        {9, "inverse-symmetry property", criterion9},
        {10, "determinism across workers", criterion10},
    };
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
        }
        report(c.n, c.what, ok, elapsed(t0));
    }
    return g_failures == 0 ? 0 : 1;
}
