#include "ppturbo/spectrum.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ppturbo/turbo.hpp"

namespace ppturbo {

namespace {

constexpr RscSpec kCode{};

struct TrellisTables {
    std::array<int, 8> tail_weight;   // sys + parity weight of the 3-cycle tail
    std::array<int, 8> finish_total;  // min remaining sys + parity cost
    std::array<int, 8> finish_dbl;    // min remaining sys + 2*parity cost,
                                      // the tail counted twice
};

TrellisTables make_tables() {
    TrellisTables t{};
    for (unsigned s = 0; s < 8; ++s) {
        int w = 0;
        unsigned cur = s;
        for (int k = 0; k < 3; ++k) {
            w += static_cast<int>(rsc::feedback(kCode, cur));
            w += static_cast<int>(rsc::parity_of(kCode, cur, 0));
            cur = rsc::next_state(kCode, cur, 0);
        }
        t.tail_weight[s] = w;
    }
    // Shortest cost to finish: either terminate right away or take one more
    // step; value iteration converges within the state-graph diameter.
    t.finish_total = t.tail_weight;
    for (unsigned s = 0; s < 8; ++s) t.finish_dbl[s] = 2 * t.tail_weight[s];
    for (int it = 0; it < 16; ++it) {
        for (unsigned s = 0; s < 8; ++s) {
            for (unsigned x = 0; x <= 1; ++x) {
                const unsigned a = x ^ rsc::feedback(kCode, s);
                const unsigned p = rsc::parity_of(kCode, s, a);
                const unsigned ns = rsc::next_state(kCode, s, a);
                t.finish_total[s] =
                    std::min(t.finish_total[s],
                             static_cast<int>(x + p) + t.finish_total[ns]);
                t.finish_dbl[s] =
                    std::min(t.finish_dbl[s],
                             static_cast<int>(x + 2 * p) + t.finish_dbl[ns]);
            }
        }
    }
    return t;
}

// Minimum parity-plus-tail weight of the opposite encoder over any nonzero
// input of the given length; independent of the interleaver.
int min_cross_weight(int L, const TrellisTables& t) {
    constexpr int kInf = INT_MAX / 4;
    std::array<int, 8> dp;
    dp.fill(kInf);
    for (int k = 0; k < L; ++k) {
        std::array<int, 8> nxt;
        nxt.fill(kInf);
        for (unsigned s = 0; s < 8; ++s) {
            if (dp[s] >= kInf) continue;
            for (unsigned x = 0; x <= 1; ++x) {
                const unsigned a = x ^ rsc::feedback(kCode, s);
                const unsigned p = rsc::parity_of(kCode, s, a);
                const unsigned ns = rsc::next_state(kCode, s, a);
                nxt[ns] = std::min(nxt[ns], dp[s] + static_cast<int>(p));
            }
        }
        // first nonzero input may occur at this position
        nxt[1] = std::min(nxt[1], 1);
        dp = nxt;
    }
    int best = kInf;
    for (unsigned s = 0; s < 8; ++s)
        if (dp[s] < kInf) best = std::min(best, dp[s] + t.tail_weight[s]);
    return best == kInf ? 0 : best;
}

struct LineAcc {
    std::uint64_t mult = 0;
    std::uint64_t info_weight = 0;
};

struct SharedState {
    int M = 0;
    int ceiling = INT_MAX;  // iterative-deepening cap on recorded distances
    std::uint64_t max_nodes = 0;
    std::map<int, LineAcc> lines;
    std::mutex mu;
    std::atomic<int> cutoff{INT_MAX};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};

    void reset_lines(int new_ceiling) {
        lines.clear();
        ceiling = new_ceiling;
        cutoff.store(new_ceiling, std::memory_order_relaxed);
    }

    void add(int d, std::uint64_t wu) {
        if (d > ceiling) return;
        std::lock_guard lock(mu);
        if (static_cast<int>(lines.size()) >= M && d > lines.rbegin()->first)
            return;
        auto& e = lines[d];
        e.mult += 1;
        e.info_weight += wu;
        while (static_cast<int>(lines.size()) > M)
            lines.erase(std::prev(lines.end()));
        const int mth = static_cast<int>(lines.size()) >= M
                            ? lines.rbegin()->first
                            : INT_MAX;
        cutoff.store(std::min(mth, ceiling), std::memory_order_relaxed);
    }

    bool flush(std::uint64_t n) {
        const std::uint64_t total = nodes.fetch_add(n) + n;
        if (max_nodes != 0 && total > max_nodes) aborted.store(true);
        return aborted.load(std::memory_order_relaxed);
    }
};

struct AbortSignal {};

// Error-event enumeration over one constituent trellis. The same machinery
// serves both halves of a two-sided search: on perm it walks encoder-1
// events with encoder 2 as the cross encoder; on the inverse permutation
// the roles swap while every codeword keeps its total weight.
//
// A codeword weighs wu + e_own + e_cross with e_* the parity-plus-tail
// share of one encoder, so min(e_own, e_cross) <= (d - wu) / 2 and each
// half only needs words with wu + 2*e_own <= cutoff -- a far tighter prune
// than anything one-sided. Ties e_own == e_cross are recorded by the
// keep_ties half only, making the two halves an exact partition.
class EventSearch {
  public:
    EventSearch(const Permutation& perm, int wu_max, bool keep_ties,
                SharedState& sh, const TrellisTables& t, int cross_min)
        : perm_(perm),
          L_(static_cast<int>(perm.length())),
          wu_max_(wu_max),
          keep_ties_(keep_ties),
          sh_(sh),
          tables_(t),
          cross_min_(cross_min),
          info_(perm.length(), 0) {}

    // Explores every information word whose first set bit is `first`.
    void explore_first(int first) {
        std::fill(info_.begin(), info_.end(), 0);
        info_[first] = 1;
        walk(first + 1, 1u, 1, 1);
        info_[first] = 0;
        flush_nodes();
    }

  private:
    void tick() {
        if (++local_nodes_ % 8192 == 0 && sh_.flush(8192)) throw AbortSignal{};
    }

    void flush_nodes() {
        sh_.flush(local_nodes_ % 8192);
        local_nodes_ -= local_nodes_ % 8192;
    }

    bool pruned(unsigned s, int wu, int par) const {
        const int cutoff = sh_.cutoff.load(std::memory_order_relaxed);
        if (wu + par + tables_.finish_total[s] + cross_min_ > cutoff)
            return true;
        return wu + 2 * par + tables_.finish_dbl[s] > cutoff;
    }

    void walk(int pos, unsigned s, int wu, int par) {
        if (s == 0) {
            at_zero(pos, wu, par);
            return;
        }
        if (pos == L_) {
            finalize(s, wu, par);
            return;
        }
        tick();
        for (unsigned x = 0; x <= 1; ++x) {
            if (x == 1 && wu >= wu_max_) break;
            const unsigned a = x ^ rsc::feedback(kCode, s);
            const unsigned p = rsc::parity_of(kCode, s, a);
            const unsigned ns = rsc::next_state(kCode, s, a);
            if (pruned(ns, wu + static_cast<int>(x), par + static_cast<int>(p)))
                continue;
            if (x) info_[pos] = 1;
            walk(pos + 1, ns, wu + static_cast<int>(x),
                 par + static_cast<int>(p));
            if (x) info_[pos] = 0;
        }
    }

    void at_zero(int pos, int wu, int par) {
        finalize(0u, wu, par);
        if (wu >= wu_max_) return;
        // Opening a new event from the zero state costs sys 1 + parity 1,
        // independent of its position; once pruned, later starts prune too.
        for (int j = pos; j < L_; ++j) {
            tick();
            if (pruned(1u, wu + 1, par + 1)) break;
            info_[j] = 1;
            walk(j + 1, 1u, wu + 1, par + 1);
            info_[j] = 0;
        }
    }

    void finalize(unsigned s, int wu, int par) {
        const int e_own = par + tables_.tail_weight[s];
        const int cutoff = sh_.cutoff.load(std::memory_order_relaxed);
        if (wu + e_own + cross_min_ > cutoff) return;
        unsigned s2 = 0;
        int p2 = 0;
        for (int k = 0; k < L_; ++k) {
            const unsigned x = info_[perm_.forward[k]];
            const unsigned a = x ^ rsc::feedback(kCode, s2);
            p2 += static_cast<int>(rsc::parity_of(kCode, s2, a));
            s2 = rsc::next_state(kCode, s2, a);
        }
        const int e_cross = p2 + tables_.tail_weight[s2];
        if (e_own > e_cross || (e_own == e_cross && !keep_ties_)) return;
        sh_.add(wu + e_own + e_cross, static_cast<std::uint64_t>(wu));
    }

    const Permutation& perm_;
    int L_;
    int wu_max_;
    bool keep_ties_;
    SharedState& sh_;
    const TrellisTables& tables_;
    int cross_min_;
    std::vector<std::uint8_t> info_;
    std::uint64_t local_nodes_ = 0;
};

DistanceSpectrum collect(SharedState& sh, int M, int wu_max) {
    DistanceSpectrum out;
    out.wu_max = wu_max;
    out.truncation = M;
    for (const auto& [d, acc] : sh.lines)
        out.lines.push_back({d, acc.mult, acc.info_weight});
    return out;
}

}  // namespace

DistanceSpectrum brute_force_spectrum(const Permutation& perm, int M) {
    const int L = static_cast<int>(perm.length());
    if (L > 22)
        throw std::invalid_argument("brute_force_spectrum: L > 22");
    if (M < 0) throw std::invalid_argument("brute_force_spectrum: M < 0");

    const TrellisTables t = make_tables();
    std::map<int, LineAcc> lines;
    const std::uint64_t top = std::uint64_t{1} << L;
    for (std::uint64_t u = 1; u < top; ++u) {
        unsigned s1 = 0, s2 = 0;
        int w = 0;
        for (int k = 0; k < L; ++k) {
            const unsigned x1 = static_cast<unsigned>((u >> k) & 1u);
            const unsigned a1 = x1 ^ rsc::feedback(kCode, s1);
            w += static_cast<int>(x1 + rsc::parity_of(kCode, s1, a1));
            s1 = rsc::next_state(kCode, s1, a1);

            const unsigned x2 = static_cast<unsigned>((u >> perm.forward[k]) & 1u);
            const unsigned a2 = x2 ^ rsc::feedback(kCode, s2);
            w += static_cast<int>(rsc::parity_of(kCode, s2, a2));
            s2 = rsc::next_state(kCode, s2, a2);
        }
        w += t.tail_weight[s1] + t.tail_weight[s2];
        auto& e = lines[w];
        e.mult += 1;
        e.info_weight += static_cast<std::uint64_t>(std::popcount(u));
    }

    DistanceSpectrum out;
    out.wu_max = L;
    out.truncation = M;
    for (const auto& [d, acc] : lines) {
        if (static_cast<int>(out.lines.size()) >= M) break;
        out.lines.push_back({d, acc.mult, acc.info_weight});
    }
    return out;
}

DistanceSpectrum distance_spectrum(const Permutation& perm, int M, int wu_max,
                                   const SpectrumBudget& budget, int jobs) {
    const int L = static_cast<int>(perm.length());
    if (M < 1) throw std::invalid_argument("distance_spectrum: M must be >= 1");
    if (wu_max < 1)
        throw std::invalid_argument("distance_spectrum: wu_max must be >= 1");
    if (jobs < 1) jobs = 1;

    const TrellisTables t = make_tables();
    const int cross_min = min_cross_weight(L, t);
    const Permutation inv = inverse_permutation(perm);
    SharedState sh;
    sh.M = M;
    sh.max_nodes = budget.max_nodes;

    const auto run_half = [&](const Permutation& p, bool keep_ties) {
        if (jobs == 1) {
            EventSearch search(p, wu_max, keep_ties, sh, t, cross_min);
            for (int j = 0; j < L; ++j) search.explore_first(j);
        } else {
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) {
                pool.emplace_back([&] {
                    EventSearch search(p, wu_max, keep_ties, sh, t, cross_min);
                    try {
                        for (int j = next.fetch_add(1); j < L;
                             j = next.fetch_add(1))
                            search.explore_first(j);
                    } catch (const AbortSignal&) {
                    }
                });
            }
            for (auto& th : pool) th.join();
            if (sh.aborted.load()) throw AbortSignal{};
        }
    };

    // Iterative deepening: with a ceiling in place the search never runs
    // unbounded before M lines exist, and lines at d <= ceiling are exact.
    const int weight_limit = 3 * L + 12;
    for (int ceiling = std::min(2 * M + 6, weight_limit);;
         ceiling = std::min(ceiling + 8, weight_limit)) {
        sh.reset_lines(ceiling);
        try {
            run_half(perm, true);
            run_half(inv, false);
        } catch (const AbortSignal&) {
            throw BudgetExceededError("distance_spectrum: node budget exceeded");
        }
        if (sh.aborted.load())
            throw BudgetExceededError("distance_spectrum: node budget exceeded");

        const bool have_all = static_cast<int>(sh.lines.size()) >= M &&
                              sh.lines.rbegin()->first <= ceiling;
        if (have_all || ceiling >= weight_limit) break;
    }
    return collect(sh, M, wu_max);
}

DistanceSpectrum merge_spectra(const DistanceSpectrum& a,
                               const DistanceSpectrum& b) {
    if (a.lines.empty() && a.truncation == 0) return b;
    if (b.lines.empty() && b.truncation == 0) return a;
    if (a.wu_max != b.wu_max)
        throw std::invalid_argument("merge_spectra: wu_max mismatch");

    const auto coverage = [](const DistanceSpectrum& s) {
        return s.exhausted() ? INT_MAX : s.lines.back().d;
    };
    const int cap = std::min(coverage(a), coverage(b));
    const int M = std::min(a.truncation, b.truncation);

    std::map<int, LineAcc> merged;
    for (const auto* src : {&a, &b})
        for (const SpectrumLine& ln : src->lines) {
            auto& e = merged[ln.d];
            e.mult += ln.mult;
            e.info_weight += ln.info_weight;
        }

    DistanceSpectrum out;
    out.wu_max = a.wu_max;
    out.truncation = M;
    for (const auto& [d, acc] : merged) {
        if (d > cap || static_cast<int>(out.lines.size()) >= M) break;
        out.lines.push_back({d, acc.mult, acc.info_weight});
    }
    return out;
}

int default_num_dist(std::uint64_t L) {
    if (L < 120) return 9;
    if (L < 296) return 7;
    return 5;
}

std::string spectrum_csv(const DistanceSpectrum& s) {
    std::ostringstream os;
    os << "d,N,w\n";
    for (const SpectrumLine& ln : s.lines)
        os << ln.d << ',' << ln.mult << ',' << ln.info_weight << '\n';
    return os.str();
}

std::string spectrum_json(const DistanceSpectrum& s) {
    nlohmann::json j;
    j["wu_max"] = s.wu_max;
    j["M"] = s.truncation;
    j["lines"] = nlohmann::json::array();
    for (const SpectrumLine& ln : s.lines)
        j["lines"].push_back({{"d", ln.d}, {"N", ln.mult}, {"w", ln.info_weight}});
    return j.dump(2);
}

}  // namespace ppturbo
