#include "hamsphere/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamsphere/enumerate.hpp"
#include "hamsphere/exact.hpp"
#include "hamsphere/moments.hpp"
#include "hamsphere/planar_checks.hpp"
#include "hamsphere/planar_gen.hpp"
#include "hamsphere/search.hpp"

namespace hamsphere {

namespace {

struct Reporter {
    std::ostream& out;
    bool all_pass = true;

    void line(const std::string& name, Verdict v, const std::string& witness) {
        out << name;
        for (size_t i = name.size(); i < 44; ++i) out << ' ';
        out << ' ' << to_string(v);
        if (!witness.empty()) out << ' ' << witness;
        out << '\n';
        if (v != Verdict::Pass) all_pass = false;
    }
    void line(const std::string& name, bool pass, const std::string& witness) {
        line(name, pass ? Verdict::Pass : Verdict::Fail, witness);
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---------------- counts ----------------

void verify_counts(Reporter& rep) {
    {
        bool ok = true;
        std::string bad;
        for (int m = 3; m <= 5 && ok; ++m)
            for (int k = 0; k <= 2 && ok; ++k) {
                auto count = enumerate_polygon_triangulations(m, k).size();
                if (BigCount(static_cast<long>(count)) != polygon_triangulation_count(k, m)) {
                    ok = false;
                    bad = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                }
            }
        ok = ok && polygon_triangulation_count(0, 4) == 2 &&
             polygon_triangulation_count(1, 4) == 5 && polygon_triangulation_count(2, 3) == 6;
        rep.line("counts/polygon_formula_vs_oracle", ok, ok ? "grid {3,4,5}x{0,1,2}" : bad);
    }
    {
        bool ok = true;
        for (long k = 0; k <= 100 && ok; ++k)
            ok = polygon_triangulation_count(k, 3) == polygon_triangulation_count_m3(k);
        rep.line("counts/triangle_formula_identity", ok, "k<=100");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = enumerate_labeled_spheres(4).size() == 1 &&
                  enumerate_labeled_spheres(5).size() == 10;
        auto s6 = enumerate_labeled_spheres(6);
        ok = ok && s6.size() == 195 && labeled_sphere_count(6) == 195;
        for (const auto& c : s6)
            if (c.triangles.size() != 8) ok = false;
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.line("counts/sphere_enumeration_n4_n5_n6", ok,
                 "1/10/195 in " + fmt(dt) + "s");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        auto s7 = enumerate_labeled_spheres(7);
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = s7.size() == 5712 && labeled_sphere_count(7) == 5712;
        rep.line("counts/sphere_enumeration_n7", ok,
                 std::to_string(s7.size()) + " spheres in " + fmt(dt) + "s");
    }
    {
        // subset route and link route agree where both run
        bool ok = true;
        for (int n : {5, 6}) {
            auto a = enumerate_labeled_spheres_subsets(n);
            auto b = enumerate_labeled_spheres_links(n);
            std::set<std::vector<Triangle>> sa, sb;
            for (auto& c : a) sa.insert(c.triangles);
            for (auto& c : b) sb.insert(c.triangles);
            if (sa != sb) ok = false;
        }
        rep.line("counts/sphere_two_route_agreement", ok, "n=5,6");
    }
    {
        bool ok = true;
        std::string w;
        for (auto [m1, m2, k] : {std::array<int, 3>{3, 3, 0}, {3, 3, 1}, {4, 3, 0},
                                 {3, 4, 1}, {4, 4, 0}}) {
            auto r = injection_inequality_check(m1, m2, k);
            if (r.verdict != Verdict::Pass) ok = false;
            if (m1 == 3 && m2 == 3 && k == 0)
                w = "T_{0,3,3}=" + r.annulus_count.str();
        }
        rep.line("counts/annulus_injection_inequality", ok, w);
    }
}

// ---------------- appendix ----------------

void verify_appendix(Reporter& rep) {
    {
        auto t0 = std::chrono::steady_clock::now();
        auto r = banana_convolution_check(200, 2);
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.line("appendix/banana_convolution_r2_k200", r.verdict,
                 r.first_failure_k ? "first failure k=" + std::to_string(*r.first_failure_k)
                                   : "k<=200 in " + fmt(dt) + "s");
    }
    {
        auto r = banana_convolution_check(60, 3);
        rep.line("appendix/banana_convolution_r3_k60", r.verdict, "");
    }
    {
        Verdict v = quad_ratio_window_check(10, 200);
        rep.line("appendix/quad_ratio_in_(1,1.05)", v,
                 "10<=k<=200, Z=" + quad_ratio_constant().str(6));
    }
    {
        ExactRatio s = tail_sum_exact();
        rep.line("appendix/tail_sum_below_1.25", tail_sum_check(),
                 "sum=" + fmt(static_cast<double>(s)));
    }
    {
        bool ok = true;
        std::ostringstream w;
        for (double delta : {0.1, 0.5, 1.0}) {
            auto r = binomial_growth_sweep(delta, 500);
            if (delta == 1.0 && r.minimal_c > 2.0 + 1e-9) ok = false;
            if (!std::isfinite(r.minimal_c)) ok = false;
            w << "C(" << delta << ")=" << fmt(r.minimal_c)
              << (r.r_interior ? "" : "[r-boundary]") << " ";
        }
        rep.line("appendix/binomial_growth_constants", ok, w.str());
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        auto bad = composition_bound_sweep(3, 6, 5, 50);
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!bad) {
            rep.line("appendix/composition_bound_16^{w-1}", Verdict::Pass,
                     "w<=3 m<=6 l<=5 k<=50 in " + fmt(dt) + "s");
        } else {
            std::ostringstream w;
            w << "m=(";
            for (long mv : bad->m) w << mv << ",";
            w << ") 2l=(";
            for (long lv : bad->l2) w << lv << ",";
            w << ") k=" << bad->k;
            rep.line("appendix/composition_bound_16^{w-1}", bad->verdict, w.str());
        }
    }
    {
        auto r1 = composition_constant_report(0.1);
        auto r2 = composition_constant_report(0.5);
        bool ok = std::isfinite(r1.minimal_c) && std::isfinite(r2.minimal_c);
        rep.line("appendix/composition_constant_report", ok,
                 "C(0.1)=" + fmt(r1.minimal_c) + " C(0.5)=" + fmt(r2.minimal_c));
    }
    {
        auto r1 = damped_power_constant_report(0.1);
        auto r2 = damped_power_constant_report(0.5);
        bool ok = std::isfinite(r1.minimal_c) && std::isfinite(r2.minimal_c);
        rep.line("appendix/damped_power_constant_report", ok,
                 "C(0.1)=" + fmt(r1.minimal_c) + " C(0.5)=" + fmt(r2.minimal_c));
    }
}

// ---------------- planar ----------------

void verify_planar(Reporter& rep) {
    {
        auto t0 = std::chrono::steady_clock::now();
        bool est_ok = true, bw_ok = true, id_ok = true;
        long instances = 0;
        for (int m = 3; m <= 8; ++m) {
            auto maps = exhaustive_connected_maps(m);
            for (auto& g : maps) {
                for (FaceColor c0 : {FaceColor::White, FaceColor::Black}) {
                    color_graph(g, c0);
                    ++instances;
                    if (planar_estimates_check(g).verdict != Verdict::Pass) est_ok = false;
                    FaceStructure fs = build_face_structure(g);
                    for (int outer = 0; outer < static_cast<int>(fs.regions.size());
                         ++outer)
                        if (bw_deficit_check(g, outer).verdict != Verdict::Pass)
                            bw_ok = false;
                    int whites = 0;
                    for (auto& reg : fs.regions) whites += reg.color == FaceColor::White;
                    std::vector<long> zero(whites, 0), ones(whites, 1);
                    if (white_triangle_count(g, zero).verdict != Verdict::Pass ||
                        white_triangle_count(g, ones).verdict != Verdict::Pass)
                        id_ok = false;
                }
            }
        }
        for (int m = 6; m <= 8; ++m) {
            for (auto& g : exhaustive_two_component_maps(m)) {
                for (FaceColor c0 : {FaceColor::White, FaceColor::Black}) {
                    color_graph(g, c0);
                    ++instances;
                    if (planar_estimates_check(g).verdict != Verdict::Pass) est_ok = false;
                    FaceStructure fs = build_face_structure(g);
                    int whites = 0;
                    for (auto& reg : fs.regions) whites += reg.color == FaceColor::White;
                    std::vector<long> ones(whites, 1);
                    if (white_triangle_count(g, ones).verdict != Verdict::Pass)
                        id_ok = false;
                }
            }
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string w = std::to_string(instances) + " instances in " + fmt(dt) + "s";
        rep.line("planar/exhaustive_estimates_m<=8", est_ok, w);
        rep.line("planar/exhaustive_bw_deficit_m<=8", bw_ok, "");
        rep.line("planar/exhaustive_euler_identity_m<=8", id_ok, "");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(20260810);
        bool est_ok = true, mckay_ok = true, id_ok = true;
        const int runs = 1000;
        for (int i = 0; i < runs; ++i) {
            int m = 6 + static_cast<int>(rng() % 35);  // m <= 40
            auto g = generate_random_colored_map(m, rng());
            if (planar_estimates_check(g).verdict != Verdict::Pass) est_ok = false;
            std::vector<ExactRatio> z;
            for (int v = 0; v < m; ++v)
                z.emplace_back(static_cast<long>(rng() % 1000), 13);
            if (mckay_check(g, z).verdict != Verdict::Pass) mckay_ok = false;
            FaceStructure fs = build_face_structure(g);
            int whites = 0;
            for (auto& reg : fs.regions) whites += reg.color == FaceColor::White;
            std::vector<long> alloc(whites);
            for (auto& a : alloc) a = static_cast<long>(rng() % 5);
            if (white_triangle_count(g, alloc).verdict != Verdict::Pass) id_ok = false;
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.line("planar/random_estimates_1000_m<=40", est_ok,
                 std::to_string(runs) + " maps in " + fmt(dt) + "s");
        rep.line("planar/random_mckay_refined_bound", mckay_ok, "");
        rep.line("planar/random_euler_identity", id_ok, "");
    }
    {
        bool ok = true;
        for (int n = 2; n <= 7; ++n) {
            std::vector<BigCount> ones(n, BigCount(1)), mixed;
            for (int v = 0; v < n; ++v) mixed.push_back(BigCount(1 + (v % 3)));
            if (weighted_cayley_check(ones).verdict != Verdict::Pass) ok = false;
            if (weighted_cayley_check(mixed).verdict != Verdict::Pass) ok = false;
        }
        rep.line("planar/weighted_cayley_n<=7", ok, "all n^{n-2} trees");
    }
    {
        auto g = generate_random_colored_map(18, 424242);
        std::stringstream ss;
        write_colored_graph(ss, g);
        auto back = read_colored_graph(ss);
        bool ok = !validate_colored_graph(back) && back.region_colors == g.region_colors;
        rep.line("planar/serialization_round_trip", ok, "m=18");
    }
}

// ---------------- moments ----------------

void verify_moments(Reporter& rep) {
    {
        bool ok = first_moment(4, ExactRatio(1, 2)) == ExactRatio(1, 16) &&
                  first_moment(5, ExactRatio(1, 2)) == ExactRatio(5, 32) &&
                  first_moment(6, ExactRatio(1)) == ExactRatio(195);
        rep.line("moments/first_moment_exact_values", ok, "E[T](5,1/2)=5/32");
    }
    {
        // independent ordered-pair oracle for the second moment at n=5
        auto hist = intersection_profile(5);
        bool profile_ok = hist[6] == 10 && hist[3] == 60 && hist[4] == 30;
        ExactRatio direct = second_moment_ratio(5, ExactRatio(1, 2));
        ExactRatio via_profile =
            (ExactRatio(10) * 64 + ExactRatio(60) * 8 + ExactRatio(30) * 16) / 100;
        bool ok = profile_ok && direct == via_profile && direct == ExactRatio(16);
        rep.line("moments/second_moment_oracle_n5", ok,
                 "profile {6:10, 3:60, 4:30}, ratio(1/2)=16");
    }
    {
        bool ok = second_moment_ratio(4, ExactRatio(1, 2)) == 16;
        for (int n = 4; n <= 6; ++n) {
            ExactRatio prev = -1;
            for (int d = 1; d <= 4; ++d) {
                ExactRatio r = second_moment_ratio(n, ExactRatio(d, 4));
                if (r < 1) ok = false;
                if (prev >= 0 && r > prev) ok = false;
                prev = r;
            }
        }
        rep.line("moments/second_moment_bounds", ok, ">=1 and nonincreasing in p");
    }
    {
        bool ok = true;
        for (int n : {4, 5})
            for (auto p : {ExactRatio(1, 3), ExactRatio(1, 2), ExactRatio(2, 3)})
                if (intersection_identity_check(n, p).verdict != Verdict::Pass) ok = false;
        rep.line("moments/intersection_identity", ok, "(n,p) in {4,5}x{1/3,1/2,2/3}");
    }
    {
        bool ok = true;
        for (int n = 4; n <= 5; ++n)
            if (exact_containment_polynomial(n) != containment_polynomial_direct(n))
                ok = false;
        auto p5 = exact_containment_polynomial(5);
        ok = ok && eval_polynomial(p5, ExactRatio(1)) == 1;
        ExactRatio prev = 0;
        for (int i = 0; i <= 40; ++i) {
            ExactRatio v = eval_polynomial(p5, ExactRatio(i, 40));
            if (v < prev) ok = false;
            prev = v;
        }
        rep.line("moments/containment_polynomial_two_routes", ok, "n=4,5; monotone");
    }
    {
        // Monte Carlo mean of the sphere count vs the exact first moment
        const int trials = 100000;
        auto spheres = enumerate_labeled_spheres(5);
        long long total = 0, containing = 0;
        for (int i = 0; i < trials; ++i) {
            Complex2 x = sample_complex(5, 0.5, trial_seed(Seed{1618033}, i));
            std::set<Triangle> have(x.triangles.begin(), x.triangles.end());
            int found = 0;
            for (const auto& s : spheres) {
                bool all = true;
                for (const Triangle& t : s.triangles)
                    if (!have.count(t)) {
                        all = false;
                        break;
                    }
                if (all) ++found;
            }
            total += found;
            containing += found > 0;
        }
        double mean = double(total) / trials;
        double sigma =
            std::sqrt(static_cast<double>(count_variance(5, ExactRatio(1, 2))) / trials);
        bool ok = std::abs(mean - 5.0 / 32.0) <= 4 * sigma;
        rep.line("moments/monte_carlo_first_moment", ok,
                 "mean=" + fmt(mean) + " target=0.15625 tol=" + fmt(4 * sigma));

        // empirical containment frequency vs the exact polynomial at p = 1/2
        auto p5 = exact_containment_polynomial(5);
        double exact_p = static_cast<double>(eval_polynomial(p5, ExactRatio(1, 2)));
        double freq = double(containing) / trials;
        double bin_sigma = std::sqrt(exact_p * (1 - exact_p) / trials);
        bool ok2 = std::abs(freq - exact_p) <= 4 * bin_sigma;
        rep.line("moments/monte_carlo_containment_probability", ok2,
                 "freq=" + fmt(freq) + " exact=" + fmt(exact_p));
    }
}

// ---------------- search ----------------

void verify_search(Reporter& rep, int threads) {
    (void)threads;
    bool agree_ok = true, witness_ok = true, reject_ok = true, det_ok = true;
    long trials_run = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int n : {4, 5}) {
        auto spheres = enumerate_labeled_spheres(n);
        std::vector<std::uint64_t> smasks;
        for (double p : {0.2, 0.5, 0.8}) {
            for (int trial = 0; trial < 1000; ++trial) {
                Complex2 c = sample_complex(
                    n, p, trial_seed(Seed{31337}, trial + 100000 * int(10 * p) + n));
                bool expect = false;
                std::set<Triangle> have(c.triangles.begin(), c.triangles.end());
                for (const auto& s : spheres) {
                    bool all = true;
                    for (const Triangle& t : s.triangles)
                        if (!have.count(t)) {
                            all = false;
                            break;
                        }
                    if (all) {
                        expect = true;
                        break;
                    }
                }
                auto r = find_spanning_sphere(c);
                ++trials_run;
                if ((r.outcome == SearchOutcome::Found) != expect) agree_ok = false;
                if (r.outcome == SearchOutcome::Found &&
                    !is_spanning_sphere(n, *r.witness))
                    witness_ok = false;
                if (expect && quick_reject(c)) reject_ok = false;
            }
        }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.line("search/oracle_agreement_1000x{4,5}x{.2,.5,.8}", agree_ok,
             std::to_string(trials_run) + " trials in " + fmt(dt) + "s");
    rep.line("search/witness_validity", witness_ok, "");
    rep.line("search/quick_reject_soundness", reject_ok, "");
    {
        for (int i = 0; i < 5; ++i) {
            Complex2 c = sample_complex(10, 0.35, trial_seed(Seed{777777}, i));
            auto a = find_spanning_sphere(c);
            auto b = find_spanning_sphere(c);
            if (a.outcome != b.outcome || a.witness != b.witness) det_ok = false;
        }
        rep.line("search/determinism", det_ok, "5 reruns at n=10");
    }
}

}  // namespace

bool run_verify(const std::vector<std::string>& suites, std::ostream& out, int threads) {
    Reporter rep{out};
    for (const std::string& s : suites) {
        if (s == "counts") verify_counts(rep);
        else if (s == "appendix") verify_appendix(rep);
        else if (s == "planar") verify_planar(rep);
        else if (s == "moments") verify_moments(rep);
        else if (s == "search") verify_search(rep, threads);
        else throw std::invalid_argument("unknown suite '" + s + "'");
    }
    return rep.all_pass;
}

}  // namespace hamsphere
