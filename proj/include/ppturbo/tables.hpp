#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppturbo {

// One reference row of the published search results. TUB values carry the
// tables' scaling: BER x 1e7, FER x 1e5. d_floor == 0 means the plain
// largest-spread search; nonzero means the D-floor-imposed cubic search.
struct GoldenRow {
    std::uint64_t L = 0;
    double snr_db = 0.0;
    int num_dist = 0;
    int d_floor = 0;
    const char* qpp;
    int qpp_D;
    double qpp_ber_e7;
    double qpp_fer_e5;
    int qpp_count;
    const char* cpp;
    int cpp_D;
    double cpp_ber_e7;
    double cpp_fer_e5;
    int cpp_count;
};

// Reference tables: 2 (AWGN, min BER), 3 (AWGN, D floor), 4 (Rayleigh,
// min FER), 5 (Rayleigh, D floor). Throws std::invalid_argument otherwise.
const std::vector<GoldenRow>& golden_table(int id);

std::optional<GoldenRow> golden_row(int table, std::uint64_t L);

// Per-length SNR schedule of the given table's channel.
std::optional<double> preset_snr_db(int table, std::uint64_t L);

}  // namespace ppturbo
