#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppturbo/poly.hpp"

namespace ppturbo {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpectrumLine {
    int d = 0;                    // codeword Hamming weight
    std::uint64_t mult = 0;       // number of information words with weight d
    std::uint64_t info_weight = 0;  // total information weight over those words

    bool operator==(const SpectrumLine&) const = default;
};

struct DistanceSpectrum {
    std::vector<SpectrumLine> lines;  // strictly ascending d
    int wu_max = 0;
    int truncation = 0;  // M, the requested number of lines

    // True when the enumeration covered all distances, i.e. fewer realized
    // distances than requested lines.
    bool exhausted() const { return static_cast<int>(lines.size()) < truncation; }
    bool operator==(const DistanceSpectrum&) const = default;
};

struct SpectrumBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
};

// Exhaustive 2^L - 1 enumeration; L <= 22. wu_max is recorded as L.
DistanceSpectrum brute_force_spectrum(const Permutation& perm, int M);

// First M spectrum lines of the subcode generated by information words of
// Hamming weight <= wu_max. Error-event enumeration over the encoder-1
// trellis with weight pruning; exact regardless of jobs.
DistanceSpectrum distance_spectrum(const Permutation& perm, int M, int wu_max,
                                   const SpectrumBudget& budget = {},
                                   int jobs = 1);

// Combines spectra of disjoint input sets; lines added per distance,
// truncated to the shared covered range.
DistanceSpectrum merge_spectra(const DistanceSpectrum& a,
                               const DistanceSpectrum& b);

// Truncation schedule from the per-length number of spectrum terms:
// 9 below 120, 7 from 120, 5 from 296.
int default_num_dist(std::uint64_t L);

// CSV with header "d,N,w".
std::string spectrum_csv(const DistanceSpectrum& s);

// JSON text with fields d, N, w per line plus wu_max and M.
std::string spectrum_json(const DistanceSpectrum& s);

}  // namespace ppturbo
