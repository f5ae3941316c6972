// ppturbo: permutation-polynomial interleaver design toolkit.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppturbo/poly.hpp"
#include "ppturbo/search.hpp"
#include "ppturbo/spectrum.hpp"
#include "ppturbo/spread.hpp"
#include "ppturbo/tables.hpp"
#include "ppturbo/tub.hpp"

using namespace ppturbo;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "ppturbo 1.0.0";

int default_jobs() {
    if (const char* env = std::getenv("PPTURBO_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

// Every result file gets a sibling <file>.manifest.json recording how it
// was produced.
void write_artifact(const std::string& path, const std::string& body,
                    const std::string& command, const json& config,
                    double elapsed, bool budget_exceeded) {
    {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write " + path);
        out << body;
    }
    json m;
    m["command"] = command;
    m["config"] = config;
    m["tool_version"] = kVersion;
    m["elapsed_seconds"] = elapsed;
    m["budget_exceeded"] = budget_exceeded;
    std::ofstream mout(path + ".manifest.json");
    mout << m.dump(2) << '\n';
}

void emit(const std::optional<std::string>& out_path, const std::string& body,
          const std::string& command, const json& config, double elapsed,
          bool budget_exceeded = false) {
    if (out_path)
        write_artifact(*out_path, body, command, config, elapsed,
                       budget_exceeded);
    else
        std::fputs(body.c_str(), stdout);
}

std::string scaled_and_raw(double ber, double fer) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "TUB_BER = %.4f e-7  (%.10e)\nTUB_FER = %.4f e-5  (%.10e)\n",
                  ber * 1e7, ber, fer * 1e5, fer);
    return buf;
}

Channel parse_channel(const std::string& s) {
    if (s == "awgn") return Channel::Awgn;
    if (s == "rayleigh") return Channel::RayleighIndependent;
    throw std::invalid_argument("channel must be awgn or rayleigh");
}

std::vector<std::uint64_t> parse_lengths(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size() || v == 0)
            throw std::invalid_argument("bad length: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("no lengths given");
    return out;
}

struct Cli {
    std::uint64_t mod = 0;
    std::string poly;
    int terms = 0;  // 0 = schedule default
    int wumax = 10;
    bool oracle = false;
    std::string channel = "awgn";
    std::string objective;
    double snr_db = 5.0;
    int degree = 2;
    int dmin = 0;
    std::uint64_t budget_nodes = 0;
    int jobs = default_jobs();
    int table = 2;
    std::string lengths;
    std::optional<std::string> out_path;
    std::string fmt = "csv";
};

int cmd_npp(const Cli& c, const std::string& cmdline, const Timer& timer) {
    std::ostringstream os;
    for (const PolyModL& p : npp_enumerate(c.mod)) os << to_string(p) << '\n';
    emit(c.out_path, os.str(), cmdline, {{"mod", c.mod}}, timer.seconds());
    return 0;
}

int cmd_check(const Cli& c, const std::string& cmdline, const Timer& timer) {
    const PolyModL p = parse_poly(c.poly, c.mod);
    const bool pp = is_permutation_polynomial(p);
    std::ostringstream os;
    os << to_string(p) << " mod " << c.mod << ": "
       << (pp ? "permutation polynomial" : "not a permutation") << '\n';
    if (pp) os << "effective_degree = " << effective_degree(p) << '\n';
    emit(c.out_path, os.str(), cmdline, {{"mod", c.mod}, {"poly", c.poly}},
         timer.seconds());
    return 0;
}

int cmd_spread(const Cli& c, const std::string& cmdline, const Timer& timer) {
    const Permutation perm = as_permutation(parse_poly(c.poly, c.mod));
    const SpreadResult r = spread_D(perm);
    std::ostringstream os;
    os << "D=" << r.d_value << '\n'
       << "witness=(" << r.witness.first << ',' << r.witness.second << ")\n";
    emit(c.out_path, os.str(), cmdline, {{"mod", c.mod}, {"poly", c.poly}},
         timer.seconds());
    return 0;
}

int cmd_spectrum(const Cli& c, const std::string& cmdline, const Timer& timer) {
    const Permutation perm = as_permutation(parse_poly(c.poly, c.mod));
    const int M = c.terms ? c.terms : default_num_dist(c.mod);
    const DistanceSpectrum s =
        c.oracle ? brute_force_spectrum(perm, M)
                 : distance_spectrum(perm, M, c.wumax,
                                     {.max_nodes = c.budget_nodes}, c.jobs);
    const std::string body = c.fmt == "json" ? spectrum_json(s) + "\n"
                                             : spectrum_csv(s);
    emit(c.out_path, body, cmdline,
         {{"mod", c.mod},
          {"poly", c.poly},
          {"terms", M},
          {"wumax", c.oracle ? static_cast<int>(c.mod) : c.wumax},
          {"oracle", c.oracle},
          {"jobs", c.jobs}},
         timer.seconds());
    return 0;
}

int cmd_tub(const Cli& c, const std::string& cmdline, const Timer& timer) {
    const Channel ch = parse_channel(c.channel);
    const Permutation perm = as_permutation(parse_poly(c.poly, c.mod));
    const int M = c.terms ? c.terms : default_num_dist(c.mod);
    const DistanceSpectrum s = distance_spectrum(
        perm, M, c.wumax, {.max_nodes = c.budget_nodes}, c.jobs);
    const BoundResult b = tub(ch, s, c.mod, code_rate(c.mod), c.snr_db);
    emit(c.out_path, scaled_and_raw(b.tub_ber, b.tub_fer), cmdline,
         {{"mod", c.mod},
          {"poly", c.poly},
          {"channel", c.channel},
          {"snr_db", c.snr_db},
          {"terms", M},
          {"wumax", c.wumax}},
         timer.seconds());
    return 0;
}

SearchConfig make_search_config(const Cli& c, Channel ch) {
    SearchConfig cfg;
    cfg.L = c.mod;
    cfg.degree = c.degree;
    cfg.channel = ch;
    cfg.objective = c.objective == "fer" || (c.objective.empty() &&
                                             ch != Channel::Awgn)
                        ? Objective::MinFer
                        : Objective::MinBer;
    cfg.snr_db = c.snr_db;
    cfg.num_dist = c.terms ? c.terms : default_num_dist(c.mod);
    cfg.wu_max = c.wumax;
    if (c.dmin) cfg.d_floor = c.dmin;
    cfg.budget.max_nodes = c.budget_nodes;
    cfg.jobs = c.jobs;
    return cfg;
}

int cmd_search(const Cli& c, const std::string& cmdline, const Timer& timer) {
    if (!c.objective.empty() && c.objective != "ber" && c.objective != "fer")
        throw std::invalid_argument("objective must be ber or fer");
    const SearchConfig cfg = make_search_config(c, parse_channel(c.channel));
    const SearchReport r = cfg.d_floor ? dmin_imposed_search(cfg) : optimize(cfg);
    std::string body;
    if (c.fmt == "json") {
        body = report_json(r) + "\n";
    } else {
        body = report_csv_header() + report_csv_row(r);
        char raw[96];
        std::snprintf(raw, sizeof(raw), "# raw: BER=%.10e FER=%.10e\n",
                      r.tub_ber, r.tub_fer);
        body += raw;
    }
    emit(c.out_path, body, cmdline,
         {{"mod", c.mod},
          {"degree", c.degree},
          {"channel", c.channel},
          {"objective", cfg.objective == Objective::MinBer ? "ber" : "fer"},
          {"snr_db", c.snr_db},
          {"num_dist", cfg.num_dist},
          {"wumax", c.wumax},
          {"dmin", c.dmin},
          {"budget_nodes", c.budget_nodes},
          {"jobs", c.jobs}},
         timer.seconds(), r.budget_exceeded);
    return r.budget_exceeded ? 3 : 0;
}

int cmd_reproduce(const Cli& c, const std::string& cmdline, const Timer& timer) {
    const auto& table = golden_table(c.table);
    std::vector<std::uint64_t> lengths;
    if (c.lengths.empty())
        for (const GoldenRow& row : table) lengths.push_back(row.L);
    else
        lengths = parse_lengths(c.lengths);

    const Channel ch =
        (c.table == 2 || c.table == 3) ? Channel::Awgn
                                       : Channel::RayleighIndependent;
    std::ostringstream os;
    os << "L,degree,SNR_dB,num_dist,poly,D,TUB_BER_e7,TUB_FER_e5,count,"
          "golden_poly,golden_D,golden_BER_e7,golden_FER_e5,golden_count,"
          "match\n";
    bool budget_hit = false;
    for (std::uint64_t L : lengths) {
        const auto row = golden_row(c.table, L);
        if (!row)
            throw std::invalid_argument("table " + std::to_string(c.table) +
                                        " has no row L=" + std::to_string(L));
        for (int degree : {2, 3}) {
            SearchConfig cfg;
            cfg.L = L;
            cfg.degree = degree;
            cfg.channel = ch;
            cfg.objective =
                ch == Channel::Awgn ? Objective::MinBer : Objective::MinFer;
            cfg.snr_db = row->snr_db;
            cfg.num_dist = row->num_dist;
            cfg.wu_max = c.wumax;
            if (row->d_floor) cfg.d_floor = row->d_floor;
            cfg.budget.max_nodes = c.budget_nodes;
            cfg.jobs = c.jobs;
            const SearchReport r =
                cfg.d_floor ? dmin_imposed_search(cfg) : optimize(cfg);
            budget_hit = budget_hit || r.budget_exceeded;

            const char* gpoly = degree == 2 ? row->qpp : row->cpp;
            const int gD = degree == 2 ? row->qpp_D : row->cpp_D;
            const double gber = degree == 2 ? row->qpp_ber_e7 : row->cpp_ber_e7;
            const double gfer = degree == 2 ? row->qpp_fer_e5 : row->cpp_fer_e5;
            const int gcount = degree == 2 ? row->qpp_count : row->cpp_count;
            const bool match =
                to_string(r.winner) == gpoly && r.d_max == gD &&
                std::fabs(r.tub_ber * 1e7 - gber) <= 5e-4 * gber + 1e-4 &&
                std::fabs(r.tub_fer * 1e5 - gfer) <= 5e-4 * gfer + 1e-4 &&
                r.optimum_count == static_cast<std::uint64_t>(gcount);

            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "%llu,%d,%g,%d,%s,%d,%.4f,%.4f,%llu,%s,%d,%.4f,%.4f,"
                          "%d,%s\n",
                          (unsigned long long)L, degree, row->snr_db,
                          row->num_dist, to_string(r.winner).c_str(), r.d_max,
                          r.tub_ber * 1e7, r.tub_fer * 1e5,
                          (unsigned long long)r.optimum_count, gpoly, gD, gber,
                          gfer, gcount, match ? "yes" : "no");
            os << buf;
        }
    }
    emit(c.out_path, os.str(), cmdline,
         {{"table", c.table},
          {"lengths", lengths},
          {"wumax", c.wumax},
          {"budget_nodes", c.budget_nodes},
          {"jobs", c.jobs}},
         timer.seconds(), budget_hit);
    return budget_hit ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-polynomial turbo interleaver toolkit"};
    app.set_version_flag("--version", kVersion);
    // key=value file; subcommand options live in a [subcommand] section
    app.set_config("--config", "", "configuration file");
    app.fallthrough();
    app.require_subcommand(1);

    Cli c;
    Timer timer;

    const auto add_common = [&](CLI::App* sub, bool needs_poly) {
        sub->add_option("--mod", c.mod, "interleaver length L")->required();
        if (needs_poly)
            sub->add_option("--poly", c.poly, "polynomial, e.g. 3x+8x^2+16x^3")
                ->required();
        sub->add_option("-o,--out", c.out_path, "write result file + manifest");
    };
    const auto add_spectrum_opts = [&](CLI::App* sub) {
        sub->add_option("--terms", c.terms, "spectrum lines M (0 = schedule)");
        sub->add_option("--wumax", c.wumax, "information-weight cap");
        sub->add_option("--budget-nodes", c.budget_nodes,
                        "search-node budget (0 = unlimited)");
        sub->add_option("--jobs", c.jobs,
                        "worker threads (env PPTURBO_JOBS, default = cores)");
    };

    auto* npp = app.add_subcommand("npp", "list all degree-<=3 null polynomials");
    npp->add_option("--mod", c.mod, "modulus L")->required();
    npp->add_option("-o,--out", c.out_path, "write result file + manifest");

    auto* check = app.add_subcommand("check", "permutation validity + effective degree");
    add_common(check, true);

    auto* spread = app.add_subcommand("spread", "spreading factor D with witness");
    add_common(spread, true);

    auto* spectrum = app.add_subcommand("spectrum", "distance spectrum");
    add_common(spectrum, true);
    add_spectrum_opts(spectrum);
    spectrum->add_flag("--oracle", c.oracle, "exhaustive 2^L enumeration (L <= 22)");
    spectrum->add_option("--format", c.fmt, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* tubcmd = app.add_subcommand("tub", "truncated union bounds");
    add_common(tubcmd, true);
    add_spectrum_opts(tubcmd);
    tubcmd->add_option("--channel", c.channel, "awgn or rayleigh")
        ->check(CLI::IsMember({"awgn", "rayleigh"}));
    tubcmd->add_option("--snr-db", c.snr_db, "Eb/N0 in dB");

    auto* search = app.add_subcommand("search", "optimizing interleaver search");
    search->add_option("--mod", c.mod, "interleaver length L")->required();
    search->add_option("-o,--out", c.out_path, "write result file + manifest");
    add_spectrum_opts(search);
    search->add_option("--degree", c.degree, "2 = QPP, 3 = CPP")
        ->check(CLI::IsMember({2, 3}));
    search->add_option("--channel", c.channel, "awgn or rayleigh")
        ->check(CLI::IsMember({"awgn", "rayleigh"}));
    search->add_option("--objective", c.objective,
                       "ber or fer (default: ber on awgn, fer on rayleigh)");
    search->add_option("--snr-db", c.snr_db, "Eb/N0 in dB");
    search->add_option("--dmin", c.dmin, "impose a spread floor D >= dmin");
    search->add_option("--format", c.fmt, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* repro = app.add_subcommand("reproduce", "preset runs vs golden tables");
    repro->add_option("--table", c.table, "2, 3, 4 or 5")
        ->check(CLI::IsMember({2, 3, 4, 5}));
    repro->add_option("--lengths", c.lengths, "comma list, default: all rows");
    repro->add_option("-o,--out", c.out_path, "write result file + manifest");
    repro->add_option("--wumax", c.wumax, "information-weight cap");
    repro->add_option("--budget-nodes", c.budget_nodes,
                      "per-spectrum node budget (0 = unlimited)");
    repro->add_option("--jobs", c.jobs,
                      "worker threads (env PPTURBO_JOBS, default = cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cmdline;
    for (int i = 0; i < argc; ++i) {
        if (i) cmdline += ' ';
        cmdline += argv[i];
    }

    try {
        if (npp->parsed()) return cmd_npp(c, cmdline, timer);
        if (check->parsed()) return cmd_check(c, cmdline, timer);
        if (spread->parsed()) return cmd_spread(c, cmdline, timer);
        if (spectrum->parsed()) return cmd_spectrum(c, cmdline, timer);
        if (tubcmd->parsed()) return cmd_tub(c, cmdline, timer);
        if (search->parsed()) return cmd_search(c, cmdline, timer);
        if (repro->parsed()) return cmd_reproduce(c, cmdline, timer);
    } catch (const BudgetExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
