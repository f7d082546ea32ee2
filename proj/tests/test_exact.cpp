#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hamsphere/exact.hpp"

using namespace hamsphere;

TEST_CASE("interval arithmetic is outward and order-correct") {
    // exact endpoints for dyadic rationals
    Interval half = Interval::from_ratio(ExactRatio(1, 2), 128);
    CHECK(half.lo_double() == 0.5);
    CHECK(half.hi_double() == 0.5);

    // 1/3 cannot be represented: the enclosure must straddle it
    Interval third = Interval::from_ratio(ExactRatio(1, 3), 64);
    CHECK(third.lo_double() < third.hi_double());
    CHECK(third.greater_than(ExactRatio(33, 100)));
    CHECK(third.less_than(ExactRatio(34, 100)));

    // sqrt(2)^2 encloses 2
    Interval r2 = Interval::from_long(2, 128).sqrt();
    Interval sq = r2.mul(r2);
    CHECK(sq.lo_double() <= 2.0);
    CHECK(sq.hi_double() >= 2.0);
    CHECK_FALSE(sq.less_than(ExactRatio(2)));
    CHECK_FALSE(sq.greater_than(ExactRatio(2)));

    // exp(1) in (2.718281828, 2.718281829)
    Interval e = Interval::from_long(1, 128).exp();
    CHECK(e.greater_than(ExactRatio(2718281828LL, 1000000000LL)));
    CHECK(e.less_than(ExactRatio(2718281829LL, 1000000000LL)));

    // pi enclosure
    Interval pi = Interval::pi(128);
    CHECK(pi.greater_than(ExactRatio(314159, 100000)));
    CHECK(pi.less_than(ExactRatio(314160, 100000)));

    // negative powers of positive intervals
    Interval inv8 = Interval::from_long(2, 128).pow_int(-3);
    CHECK(inv8.lo_double() == 0.125);
    CHECK(inv8.hi_double() == 0.125);

    CHECK_THROWS(Interval::from_long(-1, 64).sqrt());
    Interval zero_straddle = Interval::from_long(-1, 64).add(Interval::from_long(1, 64));
    CHECK_THROWS(Interval::from_long(1, 64).div(zero_straddle));

    // subtraction uses opposite endpoints
    Interval d = third.sub(third);
    CHECK(d.lo_double() <= 0.0);
    CHECK(d.hi_double() >= 0.0);
}

TEST_CASE("certify escalates precision and can stay inconclusive") {
    int calls = 0;
    Verdict v = certify(
        [&](mpfr_prec_t p) {
            ++calls;
            return p >= 512 ? Verdict::Pass : Verdict::Inconclusive;
        },
        128, 1024);
    CHECK(v == Verdict::Pass);
    CHECK(calls == 3);  // 128, 256, 512

    Verdict never = certify([](mpfr_prec_t) { return Verdict::Inconclusive; }, 128, 1024);
    CHECK(never == Verdict::Inconclusive);
}

TEST_CASE("polygon triangulation formula values") {
    CHECK(polygon_triangulation_count(0, 3) == 1);
    CHECK(polygon_triangulation_count(1, 4) == 5);
    CHECK(polygon_triangulation_count(2, 3) == 6);
    CHECK(polygon_triangulation_count(0, 4) == 2);
    CHECK(polygon_triangulation_count(2, 4) == 40);
    CHECK(polygon_triangulation_count(0, 6) == 14);  // Catalan C_4
    CHECK_THROWS(polygon_triangulation_count(0, 2));
    CHECK_THROWS(polygon_triangulation_count(-1, 3));
}

TEST_CASE("m = 3 specialization agrees with the general formula") {
    for (long k = 0; k <= 100; ++k)
        CHECK(polygon_triangulation_count(k, 3) == polygon_triangulation_count_m3(k));
}

TEST_CASE("normalized quad counts") {
    CHECK(normalized_quad_count(0) == 2);
    CHECK(normalized_quad_count(1) == 5);
    CHECK(normalized_quad_count(2) == 20);
    CHECK(normalized_quad_count(3) == 100);
}

TEST_CASE("labeled sphere counts under the oracle-pinned convention") {
    CHECK(labeled_sphere_count(4) == 1);
    CHECK(labeled_sphere_count(5) == 10);
    CHECK(labeled_sphere_count(6) == 195);
    CHECK(labeled_sphere_count(7) == 5712);
    CHECK_THROWS(labeled_sphere_count(3));
}

TEST_CASE("gamma and the critical probability") {
    CHECK(gamma_ratio() == ExactRatio(256, 27));
    auto [lo, hi] = threshold_probability(100, 0.0);
    CHECK(lo == hi);
    CHECK(std::abs(lo - 0.0535438) < 5e-8);

    // p_c(4n)/p_c(n) = 1/2
    auto a = threshold_probability(25, 0.0).first;
    auto b = threshold_probability(100, 0.0).first;
    CHECK(b == doctest::Approx(a / 2).epsilon(1e-12));

    auto [l2, h2] = threshold_probability(100, 0.1);
    CHECK(l2 == doctest::Approx(0.9 * lo));
    CHECK(h2 == doctest::Approx(1.1 * lo));
    for (long n : {4L, 12L, 1000L}) {
        auto [x, y] = threshold_probability(n, 0.5);
        CHECK(x > 0);
        CHECK(y < 1);
    }
    CHECK_THROWS(threshold_probability(3, 0.0));
    CHECK_THROWS(threshold_probability(10, 1.0));
}

TEST_CASE("banana convolution bound") {
    // pinned small cases: r=2, k=2 gives 105 <= 160; k=0 gives 4 <= 16
    auto base0 = normalized_quad_count(0), base1 = normalized_quad_count(1),
         base2 = normalized_quad_count(2);
    CHECK(2 * base0 * base2 + base1 * base1 == 105);
    CHECK(8 * base2 == 160);
    CHECK(base0 * base0 == 4);
    CHECK(8 * base0 == 16);

    auto quick = banana_convolution_check(30, 2);
    CHECK(quick.verdict == Verdict::Pass);
    auto r3 = banana_convolution_check(25, 3);
    CHECK(r3.verdict == Verdict::Pass);
    CHECK_THROWS(banana_convolution_check(10, 1));
}

TEST_CASE("quad asymptotic ratio in (1, 1.05) on a sample") {
    Interval z = quad_ratio_constant();
    CHECK(z.lo_double() > 4.85);
    CHECK(z.hi_double() < 4.86);
    CHECK(quad_ratio_window_check(10, 40) == Verdict::Pass);
    // below k = 10 the window is not claimed; the ratio is still positive
    CHECK(quad_asymptotic_ratio(1).positive());
}

TEST_CASE("tail sum") {
    // partial sum through a = 3 equals 5/g + 20/g^2 + 100/g^3 exactly
    ExactRatio g = gamma_ratio();
    ExactRatio partial = 5 / g + 20 / (g * g) + 100 / (g * g * g);
    ExactRatio expect(3637035, 4194304);
    CHECK(partial == expect);

    ExactRatio full = tail_sum_exact();
    CHECK(full > partial);  // terms are positive
    CHECK(tail_sum_check() == Verdict::Pass);
    CHECK(full < ExactRatio(5, 4));
}

TEST_CASE("normalizer is increasing and the ratio sequence is tame") {
    double prev = 0;
    for (long n = 4; n <= 12; ++n) {
        Interval norm = asymptotic_normalizer(n);
        CHECK(norm.lo_double() > prev);
        prev = norm.hi_double();
    }
    // |S_n|/normalizer is positive and slowly varying: the successive ratios
    // are 0.4606, 0.6487, 0.7568, ... increasing toward 1. (The first step
    // sits just below 1/2; the exact values are what this test pins.)
    auto ratios = normalizer_ratio_sequence(12);
    REQUIRE(ratios.size() == 9);
    double prev_q = 0;
    for (size_t i = 0; i < ratios.size(); ++i) {
        CHECK(ratios[i].positive());
        if (i > 0) {
            double q = ratios[i].mid() / ratios[i - 1].mid();
            CHECK(q > 0.4);
            CHECK(q < 1.0);
            CHECK(q > prev_q);
            prev_q = q;
        }
    }
    CHECK(ratios[1].mid() / ratios[0].mid() == doctest::Approx(0.46061).epsilon(1e-4));
}

TEST_CASE("binomial growth sweep (existential constant report)") {
    auto rep = binomial_growth_sweep(1.0, 120);
    CHECK(rep.minimal_c <= 2.0 + 1e-9);  // C(r+m,m) <= 2^{r+m}
    CHECK(rep.r_interior);
    auto rep_half = binomial_growth_sweep(0.5, 120);
    CHECK(rep_half.minimal_c >= rep.minimal_c);  // smaller delta needs larger C
}

TEST_CASE("16^{w-1} composition bound on a reduced grid") {
    auto bad = composition_bound_sweep(2, 5, 5, 12);
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("empirical constant reports stay finite") {
    auto c = composition_constant_report(0.5, 2, 4, 4, 12);
    CHECK(std::isfinite(c.minimal_c));
    CHECK(c.minimal_c > 0);
    auto d = damped_power_constant_report(0.5, 100, 100);
    CHECK(std::isfinite(d.minimal_c));
    CHECK(d.minimal_c > 0);
}
