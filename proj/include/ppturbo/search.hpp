#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppturbo/poly.hpp"
#include "ppturbo/spectrum.hpp"
#include "ppturbo/tub.hpp"

namespace ppturbo {

enum class Objective { MinBer, MinFer };

struct SearchConfig {
    std::uint64_t L = 40;
    int degree = 2;  // 2 = quadratic, 3 = cubic (includes q3 = 0 classes)
    Channel channel = Channel::Awgn;
    Objective objective = Objective::MinBer;
    double snr_db = 5.0;
    int num_dist = 9;
    int wu_max = 10;
    std::optional<int> d_floor;  // survivors need D >= floor instead of D == max
    SpectrumBudget budget;
    int jobs = 1;
};

struct CandidateSet {
    std::vector<PolyModL> polys;  // canonical reps, permutation polys, eff. deg >= 2
    std::uint64_t classes = 0;    // equivalence classes before any filtering
};

struct SearchReport {
    PolyModL winner;
    int d_max = 0;  // winner's spread
    double tub_ber = 0.0;
    double tub_fer = 0.0;
    DistanceSpectrum winner_spectrum;
    std::uint64_t optimum_count = 0;  // raw coefficient triples at the optimum
    std::uint64_t classes_examined = 0;
    std::uint64_t candidates_examined = 0;  // after PP + degree filtering
    std::uint64_t survivors = 0;
    bool budget_exceeded = false;  // partial, non-authoritative report
    bool near_tie_grouped = false;  // ties grouped only by the 1e-12 tolerance
    int wu_max_used = 0;
    std::optional<bool> wu_stable;  // set when wu_max was lowered below 10

    SearchConfig config;
};

// Raw coefficient tuples inducing the same permutation as any one
// candidate of the given search degree: gcd(L,2) for quadratic searches,
// gcd(L,6)*gcd(L,2) for cubic ones.
std::uint64_t equivalence_class_size(std::uint64_t L, int degree);

// One canonical representative per equivalence class over (q1,..,q_degree)
// with q0 = 0, keeping permutation polynomials of effective degree >= 2,
// in lexicographic order.
CandidateSet enumerate_candidates(std::uint64_t L, int degree);

// Largest-spread filter: all candidates attaining the maximum D, or all
// with D >= d_floor when a floor is given.
struct SpreadFilter {
    int d_max = 0;
    std::vector<PolyModL> survivors;
};
SpreadFilter largest_spread_set(const std::vector<PolyModL>& candidates,
                                std::optional<int> d_floor = std::nullopt,
                                int jobs = 1);

// Full search: enumerate, filter by spread, compute spectra, minimize the
// configured bound. Ties (exact, or within 1e-12 relative) are grouped;
// the reported winner is the lexicographically smallest (q1,q2,q3).
SearchReport optimize(const SearchConfig& config);

// optimize() with a mandatory D floor.
SearchReport dmin_imposed_search(const SearchConfig& config);

// CSV row in the tables' layout:
// L,SNR_dB,num_dist,poly,D,TUB_BER_e7,TUB_FER_e5,count
std::string report_csv_header();
std::string report_csv_row(const SearchReport& r);
std::string report_json(const SearchReport& r);

}  // namespace ppturbo
