// Exact arbitrary-precision counting: Tutte's polygon-triangulation formula,
// the labeled sphere count, the threshold constant gamma = 4^4/3^3, and the
// appendix verification computations (convolution bound, asymptotic ratio,
// tail sum, inequality sweeps).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamsphere/interval.hpp"

namespace hamsphere {

// T_{k,m} = 2(2m-3)!(2m+4k-5)! / ((m-1)!(m-3)!(2m+3k-3)!).
// Requires m >= 3, k >= 0; the quotient is asserted to be an exact integer.
BigCount polygon_triangulation_count(long k, long m);

// The m=3 specialization 6(4k+1)!/(3k+3)!, kept as an independent algebraic
// route for cross-checks.
BigCount polygon_triangulation_count_m3(long k);

// T'_{k,4} = T_{k,4}/k!.
ExactRatio normalized_quad_count(long k);

// Labeled sphere triangulation count |S_n| = C(n,3) T_{n-3,3} / (2n-4).
// This convention is pinned by the exhaustive enumeration oracle at
// n = 4, 5, 6 (1, 10, 195); the distinguished-triangle relation in the
// source counts the two boundary orientations of the removed triangle.
BigCount labeled_sphere_count(long n);

// gamma = 4^4/3^3 = 256/27.
ExactRatio gamma_ratio();

// sqrt(e / (gamma n)) as a certified enclosure.
Interval critical_probability(long n, mpfr_prec_t prec = 128);

// ((1-eps) p_c(n), (1+eps) p_c(n)); requires n >= 4 and 0 <= eps < 1.
std::pair<double, double> threshold_probability(long n, double eps);

// n! gamma^n n^{-7/2}.
Interval asymptotic_normalizer(long n, mpfr_prec_t prec = 128);

// |S_n| / normalizer(n) for n = 4..n_max.
std::vector<Interval> normalizer_ratio_sequence(long n_max, mpfr_prec_t prec = 128);

struct ConvolutionResult {
    Verdict verdict = Verdict::Pass;
    std::optional<long> first_failure_k;
};

// Checks sum_{k_1+...+k_r=k} prod T'_{k_i,4} <= 8^{r-1} T'_{k,4} for every
// k <= k_max, in exact rational arithmetic. Requires r >= 2.
ConvolutionResult banana_convolution_check(long k_max, int r);

// T'_{k,4} / (Z gamma^k k^{-5/2} exp(-(7/2+13/144)/k)), Z = 5120/(243 sqrt(6 pi)).
// Requires k >= 1.
Interval quad_asymptotic_ratio(long k, mpfr_prec_t prec = 192);

// Certified check that the ratio lies strictly in (1, 1.05) for every
// k in [k_lo, k_hi].
Verdict quad_ratio_window_check(long k_lo, long k_hi);

// Z itself, as an enclosure.
Interval quad_ratio_constant(mpfr_prec_t prec = 192);

// sum_{a=1}^{20} T'_{a,4} / gamma^a, exact.
ExactRatio tail_sum_exact();

// PASS iff the exact tail sum is < 5/4.
Verdict tail_sum_check();

// --- inequality sweeps (appendix) -------------------------------------

struct BinomialGrowthReport {
    double delta = 0;
    double minimal_c = 0;  // max over the grid of (C(r+m,m)/(1+delta)^r)^(1/m)
    long argmax_r = 0, argmax_m = 0;
    bool r_interior = false;  // maximizing r strictly inside the grid
};

// Obs: C(r+m,m) <= C^m (1+delta)^r. Reports the minimal C on the grid
// r, m <= grid_max; the constant is empirical (the statement is existential).
BinomialGrowthReport binomial_growth_sweep(double delta, long grid_max = 500);

struct CompositionBoundCase {
    std::vector<long> m;     // m_i >= 3
    std::vector<long> l2;    // 2*l_i (l_1 alone may be odd: a half-integer)
    long k = 0;
    Verdict verdict = Verdict::Pass;
};

// Exhaustive check of the 16^{w-1} composition inequality
//   sum_{k_1+...+k_w=k} prod (k_i+m_i)^{l_i-7/2}
//     <= 16^{w-1} (k + m_1 + sum_{2<=i<=a} m_i)^{l_1-7/2+sum_{1<i<=a+b}(l_i-5/2)}
// over all parameter tuples satisfying the hypotheses (l sorted nonincreasing,
// a = #{l_i >= 7/2}, b = #{l_i = 3}, tie rules on m_1) with w <= w_max,
// 3 <= m_i <= m_max, l_i <= l_max, k <= k_max. Returns the first failing or
// inconclusive case if any.
std::optional<CompositionBoundCase> composition_bound_sweep(int w_max, long m_max,
                                                            long l_max, long k_max);

struct EmpiricalConstantReport {
    std::string name;
    double parameter = 0;  // delta or epsilon
    double minimal_c = 0;
    std::string witness;
};

// Empirical minimal C_delta for
//   L(m,l) <= C^{sum m_i} (1+delta)^k (k+m_1)^{l_1-7/2}
// on a small grid (report only; the constant is existential).
EmpiricalConstantReport composition_constant_report(double delta, int w_max = 3,
                                                    long m_max = 6, long l1_max = 5,
                                                    long k_max = 50);

// Empirical minimal C_eps for (1-eps)^k (k+x)^l <= (1-eps)^{k/2} C^m m^l
// over a strided grid with -10 <= l <= m, 3 <= x <= m, 1 <= k <= k_max.
EmpiricalConstantReport damped_power_constant_report(double eps, long m_max = 500,
                                                     long k_max = 500);

}  // namespace hamsphere
