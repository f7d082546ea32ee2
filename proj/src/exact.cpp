#include "hamsphere/exact.hpp"

#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace hamsphere {

namespace {

BigCount factorial(unsigned long n) {
    BigCount f;
    mpz_fac_ui(f.backend().data(), n);
    return f;
}

BigCount binomial(unsigned long n, unsigned long k) {
    BigCount b;
    mpz_bin_uiui(b.backend().data(), n, k);
    return b;
}

}  // namespace

BigCount polygon_triangulation_count(long k, long m) {
    if (m < 3) throw std::invalid_argument("polygon needs m >= 3");
    if (k < 0) throw std::invalid_argument("interior point count must be nonnegative");
    ExactRatio t = ExactRatio(2) * factorial(2 * m - 3) * factorial(2 * m + 4 * k - 5);
    t /= ExactRatio(factorial(m - 1)) * factorial(m - 3) * factorial(2 * m + 3 * k - 3);
    if (denominator(t) != 1) throw std::logic_error("triangulation count not integral");
    return numerator(t);
}

BigCount polygon_triangulation_count_m3(long k) {
    if (k < 0) throw std::invalid_argument("interior point count must be nonnegative");
    ExactRatio t = ExactRatio(6) * factorial(4 * k + 1);
    t /= factorial(3 * k + 3);
    if (denominator(t) != 1) throw std::logic_error("triangulation count not integral");
    return numerator(t);
}

ExactRatio normalized_quad_count(long k) {
    return ExactRatio(polygon_triangulation_count(k, 4)) / factorial(k);
}

BigCount labeled_sphere_count(long n) {
    if (n < 4) throw std::invalid_argument("sphere count needs n >= 4");
    ExactRatio s = ExactRatio(binomial(n, 3)) * polygon_triangulation_count(n - 3, 3);
    s /= 2 * n - 4;
    if (denominator(s) != 1) throw std::logic_error("sphere count not integral");
    return numerator(s);
}

ExactRatio gamma_ratio() { return ExactRatio(256, 27); }

Interval critical_probability(long n, mpfr_prec_t prec) {
    if (n < 4) throw std::invalid_argument("n >= 4 required");
    Interval e = Interval::from_long(1, prec).exp();
    Interval gn = Interval::from_ratio(gamma_ratio() * n, prec);
    return e.div(gn).sqrt();
}

std::pair<double, double> threshold_probability(long n, double eps) {
    if (n < 4) throw std::invalid_argument("n >= 4 required");
    if (eps < 0 || eps >= 1) throw std::invalid_argument("eps must be in [0,1)");
    double mid = critical_probability(n).mid();
    return {(1 - eps) * mid, (1 + eps) * mid};
}

Interval asymptotic_normalizer(long n, mpfr_prec_t prec) {
    if (n < 4) throw std::invalid_argument("n >= 4 required");
    Interval f = Interval::from_big(factorial(n), prec);
    Interval g = Interval::from_ratio(gamma_ratio(), prec).pow_int(n);
    Interval np = Interval::from_long(n, prec);
    // n^{-7/2} = 1 / (n^3 sqrt(n))
    return f.mul(g).div(np.pow_int(3).mul(np.sqrt()));
}

std::vector<Interval> normalizer_ratio_sequence(long n_max, mpfr_prec_t prec) {
    std::vector<Interval> out;
    for (long n = 4; n <= n_max; ++n)
        out.push_back(Interval::from_big(labeled_sphere_count(n), prec)
                          .div(asymptotic_normalizer(n, prec)));
    return out;
}

ConvolutionResult banana_convolution_check(long k_max, int r) {
    if (r < 2) throw std::invalid_argument("convolution order r >= 2 required");
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    std::vector<ExactRatio> base(k_max + 1);
    for (long k = 0; k <= k_max; ++k) base[k] = normalized_quad_count(k);

    std::vector<ExactRatio> power = base;
    for (int step = 2; step <= r; ++step) {
        std::vector<ExactRatio> next(k_max + 1);
        for (long k = 0; k <= k_max; ++k) {
            ExactRatio acc = 0;
            for (long j = 0; j <= k; ++j) acc += power[j] * base[k - j];
            next[k] = acc;
        }
        power = std::move(next);
    }

    BigCount bound = 1;
    for (int i = 1; i < r; ++i) bound *= 8;
    for (long k = 0; k <= k_max; ++k) {
        if (power[k] > ExactRatio(bound) * base[k])
            return {Verdict::Fail, k};
    }
    return {Verdict::Pass, std::nullopt};
}

Interval quad_ratio_constant(mpfr_prec_t prec) {
    // Z = 5120 / (243 sqrt(6 pi))
    Interval six_pi = Interval::from_long(6, prec).mul(Interval::pi(prec));
    return Interval::from_long(5120, prec).div(
        Interval::from_long(243, prec).mul(six_pi.sqrt()));
}

Interval quad_asymptotic_ratio(long k, mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("k >= 1 required");
    Interval z = quad_ratio_constant(prec);
    Interval gk = Interval::from_ratio(gamma_ratio(), prec).pow_int(k);
    Interval kk = Interval::from_long(k, prec);
    Interval k52 = kk.pow_int(2).mul(kk.sqrt());  // k^{5/2}
    // exp(-(7/2 + 13/144)/k) with 7/2 + 13/144 = 517/144
    Interval damp = Interval::from_ratio(ExactRatio(-517, 144 * k), prec).exp();
    Interval denom = z.mul(gk).div(k52).mul(damp);
    return Interval::from_ratio(normalized_quad_count(k), prec).div(denom);
}

Verdict quad_ratio_window_check(long k_lo, long k_hi) {
    const ExactRatio one(1), bound(21, 20);
    for (long k = k_lo; k <= k_hi; ++k) {
        Verdict v = certify([&](mpfr_prec_t p) {
            Interval r = quad_asymptotic_ratio(k, p);
            if (r.greater_than(one) && r.less_than(bound)) return Verdict::Pass;
            if (r.less_than(one) || r.greater_than(bound)) return Verdict::Fail;
            return Verdict::Inconclusive;
        });
        if (v != Verdict::Pass) return v;
    }
    return Verdict::Pass;
}

ExactRatio tail_sum_exact() {
    ExactRatio inv_gamma(27, 256), sum = 0, pow = 1;
    for (long a = 1; a <= 20; ++a) {
        pow *= inv_gamma;
        sum += normalized_quad_count(a) * pow;
    }
    return sum;
}

Verdict tail_sum_check() {
    return tail_sum_exact() < ExactRatio(5, 4) ? Verdict::Pass : Verdict::Fail;
}

BinomialGrowthReport binomial_growth_sweep(double delta, long grid_max) {
    BinomialGrowthReport rep;
    rep.delta = delta;
    double log1d = std::log1p(delta);
    double best = -1e300;
    for (long m = 1; m <= grid_max; ++m) {
        for (long r = 0; r <= grid_max; ++r) {
            double logc = std::lgamma(double(r + m + 1)) - std::lgamma(double(m + 1)) -
                          std::lgamma(double(r + 1));
            double v = (logc - r * log1d) / double(m);
            if (v > best + 1e-12) {  // epsilon guard so flat steps keep the first argmax
                best = v;
                rep.argmax_r = r;
                rep.argmax_m = m;
            }
        }
    }
    rep.minimal_c = std::exp(best);
    rep.r_interior = rep.argmax_r < grid_max;
    return rep;
}

namespace {

// Certified comparison machinery for the 16^{w-1} composition bound. Every
// quantity is a positive product of integer powers and square roots of
// integers <= k_max + m_max, evaluated in double with <= ~8 roundings per
// term; sums have only positive terms, so the accumulated relative error is
// below 1e-12 and a margin factor of 1e-9 on each side makes the double
// verdict rigorous. Cases inside the margin fall back to MPFR intervals.
struct HalfPowerTerm {
    double value;  // s^{e/2} with s >= 1, e possibly negative
};

double half_power(long s, long e) {
    // s^(e/2): split e = 2q + r with r in {0,1}
    long q = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    long r = e - 2 * q;
    double num = 1.0;
    for (long i = 0; i < std::abs(q); ++i) num *= double(s);
    double v = (q >= 0) ? num : 1.0 / num;
    if (r) v *= std::sqrt(double(s));
    return v;
}

// Enumerates compositions of k into w nonnegative parts.
template <typename F>
void for_compositions(long k, int w, F&& f) {
    std::vector<long> parts(w, 0);
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == w - 1) {
            parts[i] = rem;
            f(parts);
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            parts[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, k);
}

Verdict composition_case_double(const std::vector<long>& m, const std::vector<long>& l2,
                                long k, int a, int b) {
    const int w = static_cast<int>(m.size());
    double lhs = 0;
    for_compositions(k, w, [&](const std::vector<long>& parts) {
        double term = 1;
        for (int i = 0; i < w; ++i) term *= half_power(parts[i] + m[i], l2[i] - 7);
        lhs += term;
    });
    long base = k + m[0];
    for (int i = 1; i < a; ++i) base += m[i];
    long e2 = (l2[0] - 7);
    for (int i = 1; i < a + b; ++i) e2 += l2[i] - 5;
    double rhs = half_power(base, e2);
    for (int i = 1; i < w; ++i) rhs *= 16.0;
    if (lhs * (1 + 1e-9) <= rhs * (1 - 1e-9)) return Verdict::Pass;
    if (lhs * (1 - 1e-9) > rhs * (1 + 1e-9)) return Verdict::Fail;
    return Verdict::Inconclusive;
}

Verdict composition_case_interval(const std::vector<long>& m, const std::vector<long>& l2,
                                  long k, int a, int b, mpfr_prec_t prec) {
    const int w = static_cast<int>(m.size());
    auto half_power_iv = [&](long s, long e) {
        long q = (e >= 0) ? e / 2 : -((-e + 1) / 2);
        long r = e - 2 * q;
        Interval v = Interval::from_long(s, prec).pow_int(q);
        if (r) v = v.mul(Interval::from_long(s, prec).sqrt());
        return v;
    };
    Interval lhs = Interval::from_long(0, prec);
    for_compositions(k, w, [&](const std::vector<long>& parts) {
        Interval term = Interval::from_long(1, prec);
        for (int i = 0; i < w; ++i)
            term = term.mul(half_power_iv(parts[i] + m[i], l2[i] - 7));
        lhs = lhs.add(term);
    });
    long base = k + m[0];
    for (int i = 1; i < a; ++i) base += m[i];
    long e2 = (l2[0] - 7);
    for (int i = 1; i < a + b; ++i) e2 += l2[i] - 5;
    Interval rhs = half_power_iv(base, e2);
    for (int i = 1; i < w; ++i) rhs = rhs.mul(Interval::from_long(16, prec));
    if (lhs.less_equal(rhs)) return Verdict::Pass;
    if (rhs.less_than(lhs)) return Verdict::Fail;
    return Verdict::Inconclusive;
}

}  // namespace

std::optional<CompositionBoundCase> composition_bound_sweep(int w_max, long m_max,
                                                            long l_max, long k_max) {
    // doubled l values; slot 0 may hold an odd value (half-integer l_1 >= 7/2)
    std::vector<long> first_slot, tail_slot;
    for (long v = 2; v <= 2 * l_max; v += 2) tail_slot.push_back(v);
    first_slot = tail_slot;
    for (long v = 7; v <= 2 * l_max; v += 2) first_slot.push_back(v);
    std::sort(first_slot.begin(), first_slot.end());

    std::optional<CompositionBoundCase> bad;
    for (int w = 1; w <= w_max && !bad; ++w) {
        if (w == 1) continue;  // both sides are the identical expression
        std::vector<long> l2(w), m(w);
        auto check_tuple = [&]() -> bool {
            if (l2[0] >= 8) {  // integer l_1 >= 4: m_1 maximal among top ties
                for (int t = 1; t < w; ++t)
                    if (l2[t] == l2[0] && m[t] > m[0]) return true;
            } else if (l2[0] == 6) {  // l_1 = 3: m_1 minimal among ties
                for (int t = 1; t < w; ++t)
                    if (l2[t] == 6 && m[t] < m[0]) return true;
            }
            int a = 0, b = 0;
            for (long v : l2) {
                if (v >= 7) ++a;
                else if (v == 6) ++b;
            }
            for (long k = 0; k <= k_max; ++k) {
                Verdict v = composition_case_double(m, l2, k, a, b);
                if (v == Verdict::Inconclusive)
                    v = certify([&](mpfr_prec_t p) {
                        return composition_case_interval(m, l2, k, a, b, p);
                    });
                if (v != Verdict::Pass) {
                    bad = CompositionBoundCase{m, l2, k, v};
                    return false;
                }
            }
            return true;
        };
        auto enum_m = [&](auto&& self, int j) -> bool {
            if (j == w) return check_tuple();
            for (long mv = 3; mv <= m_max; ++mv) {
                m[j] = mv;
                if (!self(self, j + 1)) return false;
            }
            return true;
        };
        auto enum_l = [&](auto&& self, int i) -> bool {
            if (i == w) return enum_m(enum_m, 0);
            const auto& slots = (i == 0) ? first_slot : tail_slot;
            for (long v : slots) {
                if (i > 0 && v > l2[i - 1]) continue;  // sorted nonincreasing
                l2[i] = v;
                if (!self(self, i + 1)) return false;
            }
            return true;
        };
        enum_l(enum_l, 0);
    }
    return bad;
}

EmpiricalConstantReport composition_constant_report(double delta, int w_max, long m_max,
                                                    long l1_max, long k_max) {
    EmpiricalConstantReport rep;
    rep.name = "composition_constant";
    rep.parameter = delta;
    double best = -1e300;
    for (int w = 1; w <= w_max; ++w) {
        std::vector<long> l(w), m(w);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == w) {
                long sum_m = 0;
                for (long mv : m) sum_m += mv;
                for (long k = 0; k <= k_max; k += 5) {
                    double lhs = 0;
                    for_compositions(k, w, [&](const std::vector<long>& parts) {
                        double t = 1;
                        for (int j = 0; j < w; ++j)
                            t *= std::pow(double(parts[j] + m[j]), double(l[j]) - 3.5);
                        lhs += t;
                    });
                    double denom = std::pow(1 + delta, double(k)) *
                                   std::pow(double(k + m[0]), double(l[0]) - 3.5);
                    double v = std::log(lhs / denom) / double(sum_m);
                    if (v > best) {
                        best = v;
                        rep.witness = "w=" + std::to_string(w) + " k=" + std::to_string(k);
                    }
                }
                return;
            }
            long l_hi = (i == 0) ? l1_max : 3;  // l_i <= 3 for i >= 2
            for (long lv = 1; lv <= l_hi; ++lv) {
                l[i] = lv;
                for (long mv = 3; mv <= m_max; ++mv) {
                    m[i] = mv;
                    self(self, i + 1);
                }
            }
        };
        rec(rec, 0);
    }
    rep.minimal_c = std::exp(best);
    return rep;
}

EmpiricalConstantReport damped_power_constant_report(double eps, long m_max, long k_max) {
    EmpiricalConstantReport rep;
    rep.name = "damped_power_constant";
    rep.parameter = eps;
    double best = -1e300;
    double log1e = std::log1p(-eps);
    for (long m = 3; m <= m_max; m = std::max(m + 1, m + m / 8)) {
        std::vector<long> ls = {-10, -5, -1, 0, 1, m / 4, m / 2, m};
        std::vector<long> xs = {3, std::max<long>(3, m / 2), m};
        for (long l : ls) {
            if (l > m || l < -10) continue;
            for (long x : xs) {
                if (x < 3 || x > m) continue;
                for (long k = 1; k <= k_max; k = std::max(k + 1, k + k / 8)) {
                    double v = (0.5 * k * log1e + l * std::log(double(k + x)) -
                                l * std::log(double(m))) /
                               double(m);
                    if (v > best) {
                        best = v;
                        rep.witness = "m=" + std::to_string(m) + " l=" + std::to_string(l) +
                                      " x=" + std::to_string(x) + " k=" + std::to_string(k);
                    }
                }
            }
        }
    }
    rep.minimal_c = std::exp(best);
    return rep;
}

}  // namespace hamsphere
