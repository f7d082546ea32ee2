// Command-line harness: counting, enumeration, sampling, search, moment
// reports, threshold sweeps, and the verification suites.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hamsphere/enumerate.hpp"
#include "hamsphere/exact.hpp"
#include "hamsphere/moments.hpp"
#include "hamsphere/search.hpp"
#include "hamsphere/sweep.hpp"
#include "hamsphere/verify.hpp"

using namespace hamsphere;

namespace {

ExactRatio parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return ExactRatio(BigCount(s));
    BigCount num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den <= 0) throw CLI::ValidationError("rational", "denominator must be positive");
    return ExactRatio(num) / ExactRatio(den);
}

void print_complexes(const std::vector<Complex2>& cs, bool count_only) {
    if (count_only) {
        std::cout << cs.size() << "\n";
        return;
    }
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) std::cout << "\n";
        write_complex(std::cout, cs[i]);
    }
}

std::vector<Complex2> wrap_triangle_sets(int n,
                                         const std::vector<std::vector<Triangle>>& sets) {
    std::vector<Complex2> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(make_complex(n, s));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-sphere combinatorics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int threads = 1;
    std::string format = "text";
    app.add_option("--seed", seed, "master seed (64-bit)")->capture_default_str();
    app.add_option("--threads", threads, "worker threads")->capture_default_str();
    app.add_option("--format", format, "output format: csv|text")
        ->check(CLI::IsMember({"csv", "text"}));

    // ---- count ----
    auto* count = app.add_subcommand("count", "exact counts and constants");
    count->require_subcommand(1);
    count->fallthrough();
    long c_m = 3, c_k = 0, c_n = 4;
    double c_eps = 0.0;
    auto* cp = count->add_subcommand("polygon", "T_{k,m}");
    cp->add_option("-m", c_m)->required();
    cp->add_option("-k", c_k)->required();
    cp->callback([&] { std::cout << polygon_triangulation_count(c_k, c_m) << "\n"; });
    auto* cs = count->add_subcommand("spheres", "|S_n|");
    cs->add_option("-n", c_n)->required();
    cs->callback([&] { std::cout << labeled_sphere_count(c_n) << "\n"; });
    auto* cq = count->add_subcommand("quad", "T'_{k,4}");
    cq->add_option("-k", c_k)->required();
    cq->callback([&] { std::cout << normalized_quad_count(c_k) << "\n"; });
    auto* cn = count->add_subcommand("normalizer", "n! gamma^n n^{-7/2} and |S_n|/it");
    cn->add_option("-n", c_n)->required();
    cn->callback([&] {
        Interval norm = asymptotic_normalizer(c_n);
        std::cout << "normalizer=" << norm.str(12) << "\n";
        std::cout << "ratio="
                  << Interval::from_big(labeled_sphere_count(c_n), 128).div(norm).str(12)
                  << "\n";
    });
    auto* ct = count->add_subcommand("threshold", "(1-eps, 1+eps) window around p_c(n)");
    ct->add_option("-n", c_n)->required();
    ct->add_option("--eps", c_eps)->capture_default_str();
    ct->callback([&] {
        auto [lo, hi] = threshold_probability(c_n, c_eps);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.10g %.10g\n", lo, hi);
        std::cout << buf;
    });

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive oracles");
    enumerate->require_subcommand(1);
    enumerate->fallthrough();
    bool count_only = false, allow_n8 = false;
    int e_n = 5, e_m = 4, e_k = 0, e_m1 = 3, e_m2 = 3;
    enumerate->add_flag("--count-only", count_only, "print only the count");
    auto* es = enumerate->add_subcommand("spheres", "all labeled sphere triangulations");
    es->add_option("-n", e_n)->required();
    es->add_flag("--allow-n8", allow_n8, "permit the n=8 run (slow)");
    es->callback([&] { print_complexes(enumerate_labeled_spheres(e_n, allow_n8), count_only); });
    auto* ep = enumerate->add_subcommand("polygon", "disc triangulations");
    ep->add_option("-m", e_m)->required();
    ep->add_option("-k", e_k)->required();
    ep->callback([&] {
        print_complexes(wrap_triangle_sets(e_m + e_k, enumerate_polygon_triangulations(e_m, e_k)),
                        count_only);
    });
    auto* ea = enumerate->add_subcommand("annulus", "two-hole triangulations");
    ea->add_option("--m1", e_m1)->required();
    ea->add_option("--m2", e_m2)->required();
    ea->add_option("-k", e_k)->required();
    ea->callback([&] {
        print_complexes(
            wrap_triangle_sets(e_m1 + e_m2 + e_k, enumerate_annulus_triangulations(e_m1, e_m2, e_k)),
            count_only);
    });

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw one complex from X_2(n,p)");
    int s_n = 10;
    double s_p = 0.1;
    std::uint64_t s_trial = 0;
    sample->add_option("-n", s_n)->required();
    sample->add_option("-p", s_p, "inclusion probability")->required();
    sample->add_option("--trial", s_trial, "trial index")->capture_default_str();
    sample->callback([&] {
        write_complex(std::cout, sample_complex(s_n, s_p, trial_seed(Seed{seed}, s_trial)));
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "find a spanning sphere in a complex");
    std::string in_path = "-";
    SearchBudget budget;
    search->add_option("file", in_path, "complex file ('-' = stdin)");
    search->add_option("--node-limit", budget.node_limit)->capture_default_str();
    search->add_option("--time-limit", budget.time_limit_seconds, "seconds, 0 = off")
        ->capture_default_str();
    int search_exit = 0;
    search->callback([&] {
        Complex2 c;
        if (in_path == "-") {
            c = read_complex(std::cin);
        } else {
            std::ifstream f(in_path);
            if (!f) throw CLI::ValidationError("file", "cannot open " + in_path);
            c = read_complex(f);
        }
        SearchResult r = find_spanning_sphere(c, budget);
        switch (r.outcome) {
            case SearchOutcome::Found: std::cout << "FOUND\n"; break;
            case SearchOutcome::NotFound: std::cout << "NOT_FOUND\n"; search_exit = 1; break;
            case SearchOutcome::Timeout: std::cout << "TIMEOUT\n"; search_exit = 2; break;
        }
        if (r.witness)
            for (const Triangle& t : *r.witness)
                std::cout << "t " << t.v[0] << " " << t.v[1] << " " << t.v[2] << "\n";
        std::cout << "nodes " << r.stats.nodes << "\n";
        std::cout << "max_depth " << r.stats.max_depth << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "wall_seconds %.6f\n", r.stats.wall_seconds);
        std::cout << buf;
    });

    // ---- moments ----
    auto* moments = app.add_subcommand("moments", "exact moment report");
    int m_n = 5;
    std::string m_p = "1/2";
    moments->add_option("--n", m_n)->required();
    moments->add_option("--p", m_p, "exact rational a/b")->required();
    moments->callback([&] {
        MomentReport r = moment_report(m_n, parse_rational(m_p));
        std::ostringstream smr;
        if (r.second_moment_ratio) smr << *r.second_moment_ratio;
        if (format == "csv") {
            std::cout << "n,p,sphere_count,expected_count,second_moment_ratio\n"
                      << r.n << "," << r.p << "," << r.sphere_count_used << ","
                      << r.expected_count << "," << smr.str() << "\n";
            return;
        }
        std::cout << "n=" << r.n << "\n";
        std::cout << "p=" << r.p << "\n";
        std::cout << "sphere_count=" << r.sphere_count_used << "\n";
        std::cout << "expected_count=" << r.expected_count << "\n";
        if (r.second_moment_ratio) std::cout << "second_moment_ratio=" << smr.str() << "\n";
    });

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo threshold sweep (CSV)");
    SweepConfig scfg;
    std::vector<double> p_list, pc_mults;
    std::string out_path = "-";
    sweep->add_option("--n", scfg.n)->capture_default_str();
    sweep->add_option("--trials", scfg.trials)->capture_default_str();
    sweep->add_option("--p", p_list, "explicit p values");
    sweep->add_option("--pc-mult", pc_mults, "multiples of p_c(n) (default 0.5 1 2)");
    sweep->add_option("--node-limit", scfg.budget.node_limit)->capture_default_str();
    sweep->add_option("--out", out_path, "output file ('-' = stdout)");
    sweep->callback([&] {
        scfg.master_seed = seed;
        scfg.threads = threads;
        scfg.p_values = p_list;
        scfg.pc_multiples = pc_mults.empty() ? std::vector<double>{0.5, 1.0, 2.0} : pc_mults;
        auto records = run_sweep(scfg);
        if (out_path == "-") {
            emit_csv(std::cout, records);
        } else {
            std::ofstream f(out_path);
            if (!f) throw CLI::ValidationError("out", "cannot open " + out_path);
            emit_csv(f, records);
        }
        // flag (but do not fail on) empirical non-monotonicity: within
        // overlapping confidence intervals this is sampling noise
        for (size_t i = 1; i < records.size(); ++i)
            if (records[i].phat < records[i - 1].phat)
                std::cerr << "note: phat dips between p=" << records[i - 1].p << " and p="
                          << records[i].p
                          << (records[i].ci_high >= records[i - 1].ci_low
                                  ? " (confidence intervals overlap)\n"
                                  : " (outside CI overlap)\n");
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites,
                       "counts|appendix|planar|moments|search (default: all)");
    bool verify_ok = true;
    verify->callback([&] {
        if (suites.empty())
            suites = {"counts", "appendix", "planar", "moments", "search"};
        verify_ok = run_verify(suites, std::cout, threads);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (search->parsed()) return search_exit;
    if (verify->parsed()) return verify_ok ? 0 : 1;
    return 0;
}
