#include "ppturbo/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "ppturbo/spread.hpp"

namespace ppturbo {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    const int workers = std::min<std::size_t>(jobs, n);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

bool is_canonical(const PolyModL& p, const std::vector<PolyModL>& npps) {
    for (const PolyModL& n : npps) {
        const PolyModL member(p.modulus, p.q0, p.q1 + n.q1, p.q2 + n.q2,
                              p.q3 + n.q3);
        if (lex_less(member, p)) return false;
    }
    return true;
}

int effective_degree_cached(const PolyModL& p,
                            const std::vector<PolyModL>& full_npps) {
    int best = p.degree();
    for (const PolyModL& n : full_npps) {
        const PolyModL member(p.modulus, p.q0, p.q1 + n.q1, p.q2 + n.q2,
                              p.q3 + n.q3);
        best = std::min(best, member.degree());
    }
    return best;
}

void validate(const SearchConfig& cfg) {
    if (cfg.degree != 2 && cfg.degree != 3)
        throw std::invalid_argument("search: degree must be 2 or 3");
    if (cfg.num_dist < 1)
        throw std::invalid_argument("search: num_dist must be >= 1");
    if (cfg.wu_max < 1)
        throw std::invalid_argument("search: wu_max must be >= 1");
    if (!std::isfinite(cfg.snr_db))
        throw std::invalid_argument("search: snr_db must be finite");
    if (cfg.d_floor && *cfg.d_floor < 2)
        throw std::invalid_argument("search: d_floor must be >= 2");
}

}  // namespace

std::uint64_t equivalence_class_size(std::uint64_t L, int degree) {
    const std::uint64_t g2 = std::gcd(L, std::uint64_t{2});
    if (degree == 2) return g2;
    return std::gcd(L, std::uint64_t{6}) * g2;
}

CandidateSet enumerate_candidates(std::uint64_t L, int degree) {
    if (degree != 2 && degree != 3)
        throw std::invalid_argument("enumerate_candidates: degree must be 2 or 3");
    const std::vector<PolyModL> full_npps = npp_enumerate(L);
    const std::vector<PolyModL> class_npps =
        degree == 3 ? full_npps : npp_enumerate_deg2(L);

    CandidateSet out;
    const std::uint64_t q3_top = degree == 3 ? L : 1;
    for (std::uint64_t q1 = 0; q1 < L; ++q1) {
        for (std::uint64_t q2 = 0; q2 < L; ++q2) {
            for (std::uint64_t q3 = 0; q3 < q3_top; ++q3) {
                const PolyModL p(L, 0, q1, q2, q3);
                if (!is_canonical(p, class_npps)) continue;
                ++out.classes;
                if (effective_degree_cached(p, full_npps) < 2) continue;
                if (!is_permutation_polynomial(p)) continue;
                out.polys.push_back(p);
            }
        }
    }
    return out;
}

SpreadFilter largest_spread_set(const std::vector<PolyModL>& candidates,
                                std::optional<int> d_floor, int jobs) {
    if (candidates.empty())
        throw std::invalid_argument("largest_spread_set: empty candidate set");

    std::vector<int> d(candidates.size(), 0);
    std::atomic<int> best{d_floor ? *d_floor : 2};
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        const Permutation perm = as_permutation(candidates[i]);
        const int threshold = d_floor ? *d_floor : best.load(std::memory_order_relaxed);
        d[i] = detail::spread_at_least(perm, threshold);
        if (!d_floor) {
            int cur = best.load(std::memory_order_relaxed);
            while (d[i] > cur &&
                   !best.compare_exchange_weak(cur, d[i], std::memory_order_relaxed)) {
            }
        }
    });

    SpreadFilter out;
    if (d_floor) {
        out.d_max = *std::max_element(d.begin(), d.end());
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (d[i] >= *d_floor) out.survivors.push_back(candidates[i]);
    } else {
        out.d_max = *std::max_element(d.begin(), d.end());
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (d[i] == out.d_max) out.survivors.push_back(candidates[i]);
    }
    return out;
}

SearchReport optimize(const SearchConfig& cfg) {
    validate(cfg);

    SearchReport report;
    report.config = cfg;
    report.wu_max_used = cfg.wu_max;

    const CandidateSet cs = enumerate_candidates(cfg.L, cfg.degree);
    report.classes_examined = cs.classes;
    report.candidates_examined = cs.polys.size();
    if (cs.polys.empty())
        throw std::runtime_error("optimize: no surviving candidates");

    const SpreadFilter sf = largest_spread_set(cs.polys, cfg.d_floor, cfg.jobs);
    report.survivors = sf.survivors.size();

    struct Eval {
        bool ok = false;
        bool budget = false;
        double objective = 0.0;
        double ber = 0.0;
        double fer = 0.0;
        DistanceSpectrum spec;
    };
    std::vector<Eval> evals(sf.survivors.size());
    parallel_for(sf.survivors.size(), cfg.jobs, [&](std::size_t i) {
        Eval& e = evals[i];
        try {
            const Permutation perm = as_permutation(sf.survivors[i]);
            e.spec = distance_spectrum(perm, cfg.num_dist, cfg.wu_max, cfg.budget);
            const BoundResult b =
                tub(cfg.channel, e.spec, cfg.L, code_rate(cfg.L), cfg.snr_db);
            e.ber = b.tub_ber;
            e.fer = b.tub_fer;
            e.objective = cfg.objective == Objective::MinBer ? e.ber : e.fer;
            e.ok = true;
        } catch (const BudgetExceededError&) {
            e.budget = true;
        }
    });

    for (const Eval& e : evals)
        if (e.budget) report.budget_exceeded = true;

    double vmin = std::numeric_limits<double>::infinity();
    for (const Eval& e : evals)
        if (e.ok) vmin = std::min(vmin, e.objective);
    if (!std::isfinite(vmin))
        throw BudgetExceededError("optimize: every survivor exceeded the budget");

    // Exact equality defines a tie; a relative tolerance groups near-ties
    // caused by reordering, and such grouping is surfaced in the report.
    std::vector<std::size_t> winners;
    for (std::size_t i = 0; i < evals.size(); ++i) {
        if (!evals[i].ok) continue;
        if (evals[i].objective == vmin) {
            winners.push_back(i);
        } else if (evals[i].objective <= vmin * (1.0 + 1e-12)) {
            winners.push_back(i);
            report.near_tie_grouped = true;
        }
    }

    std::size_t best = winners.front();
    for (std::size_t i : winners)
        if (lex_less(sf.survivors[i], sf.survivors[best])) best = i;

    report.winner = sf.survivors[best];
    report.d_max = spread_D(as_permutation(report.winner)).d_value;
    report.tub_ber = evals[best].ber;
    report.tub_fer = evals[best].fer;
    report.winner_spectrum = evals[best].spec;
    report.optimum_count =
        winners.size() * equivalence_class_size(cfg.L, cfg.degree);

    if (cfg.wu_max < 10 && cfg.wu_max > 1 && !report.budget_exceeded) {
        try {
            const DistanceSpectrum lower = distance_spectrum(
                as_permutation(report.winner), cfg.num_dist, cfg.wu_max - 1,
                cfg.budget);
            report.wu_stable = lower.lines == report.winner_spectrum.lines;
        } catch (const BudgetExceededError&) {
            report.wu_stable = std::nullopt;
        }
    }
    return report;
}

SearchReport dmin_imposed_search(const SearchConfig& cfg) {
    if (!cfg.d_floor)
        throw std::invalid_argument("dmin_imposed_search: d_floor must be set");
    return optimize(cfg);
}

std::string report_csv_header() {
    return "L,SNR_dB,num_dist,poly,D,TUB_BER_e7,TUB_FER_e5,count\n";
}

std::string report_csv_row(const SearchReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%llu,%g,%d,%s,%d,%.4f,%.4f,%llu\n",
                  static_cast<unsigned long long>(r.config.L), r.config.snr_db,
                  r.config.num_dist, to_string(r.winner).c_str(), r.d_max,
                  r.tub_ber * 1e7, r.tub_fer * 1e5,
                  static_cast<unsigned long long>(r.optimum_count));
    return buf;
}

std::string report_json(const SearchReport& r) {
    nlohmann::json j;
    j["L"] = r.config.L;
    j["degree"] = r.config.degree;
    j["channel"] = r.config.channel == Channel::Awgn ? "awgn" : "rayleigh";
    j["objective"] = r.config.objective == Objective::MinBer ? "ber" : "fer";
    j["snr_db"] = r.config.snr_db;
    j["num_dist"] = r.config.num_dist;
    j["wu_max"] = r.wu_max_used;
    if (r.config.d_floor) j["d_floor"] = *r.config.d_floor;
    j["winner"] = to_string(r.winner);
    j["D"] = r.d_max;
    j["tub_ber"] = r.tub_ber;
    j["tub_fer"] = r.tub_fer;
    j["tub_ber_e7"] = r.tub_ber * 1e7;
    j["tub_fer_e5"] = r.tub_fer * 1e5;
    j["optimum_count"] = r.optimum_count;
    j["classes_examined"] = r.classes_examined;
    j["candidates_examined"] = r.candidates_examined;
    j["survivors"] = r.survivors;
    j["budget_exceeded"] = r.budget_exceeded;
    j["near_tie_grouped"] = r.near_tie_grouped;
    if (r.wu_stable) j["wu_stable"] = *r.wu_stable;
    j["spectrum"] = nlohmann::json::parse(spectrum_json(r.winner_spectrum));
    return j.dump(2);
}

}  // namespace ppturbo
