#include "hamsphere/moments.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hamsphere/enumerate.hpp"

namespace hamsphere {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(Seed s, std::uint64_t trial_index) {
    return mix64(s.master + (trial_index + 1) * 0x9E3779B97F4A7C15ull);
}

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }
};

}  // namespace

std::uint64_t bernoulli_threshold(double p) {
    if (p <= 0) return 0;
    if (p >= 1) return ~0ull;  // callers treat p >= 1 as "always"
    int e = 0;
    double m = std::frexp(p, &e);  // p = m * 2^e, m in [0.5, 1)
    auto m53 = static_cast<std::uint64_t>(std::ldexp(m, 53));  // exact
    int shift = e + 11;  // p * 2^64 = m53 * 2^(e+11)
    if (shift >= 0) return m53 << shift;
    return m53 >> (-shift);
}

Complex2 sample_complex(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
    const bool always = p >= 1;
    const std::uint64_t th = bernoulli_threshold(p);
    SplitMix rng{seed};
    std::vector<Triangle> tris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::uint64_t draw = rng.next();
                if (always || draw < th) tris.push_back(Triangle{{i, j, k}});
            }
    return Complex2{n, std::move(tris)};
}

namespace {

// bitmask encodings of the sphere family over the lexicographic triple order
struct SphereMasks {
    int n;
    int n_triples;
    std::vector<std::uint64_t> masks;
};

int triple_index(int n, int i, int j, int k) {
    // rank of (i<j<k) in lexicographic order
    auto c2 = [](long v) { return v * (v - 1) / 2; };
    auto c3 = [](long v) { return v * (v - 1) * (v - 2) / 6; };
    return static_cast<int>(c3(n) - c3(n - i) + c2(n - i - 1) - c2(n - j) + (k - j - 1));
}

SphereMasks sphere_masks(int n) {
    if (n < 4 || n > 7) throw std::invalid_argument("sphere enumeration needs 4 <= n <= 7");
    SphereMasks sm;
    sm.n = n;
    sm.n_triples = n * (n - 1) * (n - 2) / 6;
    assert(sm.n_triples <= 64);
    for (const Complex2& c : enumerate_labeled_spheres(n)) {
        std::uint64_t m = 0;
        for (const Triangle& t : c.triangles)
            m |= 1ull << triple_index(n, t.v[0], t.v[1], t.v[2]);
        sm.masks.push_back(m);
    }
    return sm;
}

ExactRatio pow_ratio(const ExactRatio& x, long e) {
    ExactRatio r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

ExactRatio first_moment(int n, const ExactRatio& p) {
    if (n < 4) throw std::invalid_argument("n >= 4 required");
    if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
    return ExactRatio(labeled_sphere_count(n)) * pow_ratio(p, 2 * n - 4);
}

std::vector<long long> intersection_profile(int n) {
    SphereMasks sm = sphere_masks(n);
    std::vector<long long> hist(2 * n - 4 + 1, 0);
    for (std::uint64_t a : sm.masks)
        for (std::uint64_t b : sm.masks) ++hist[__builtin_popcountll(a & b)];
    return hist;
}

ExactRatio second_moment_ratio(int n, const ExactRatio& p) {
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0,1]");
    auto hist = intersection_profile(n);
    ExactRatio inv = 1 / p, sum = 0, power = 1;
    for (size_t c = 0; c < hist.size(); ++c) {
        if (hist[c]) sum += ExactRatio(static_cast<long long>(hist[c])) * power;
        power *= inv;
    }
    BigCount s = labeled_sphere_count(n);
    return sum / ExactRatio(s * s);
}

MomentReport moment_report(int n, const ExactRatio& p) {
    MomentReport r;
    r.n = n;
    r.p = p;
    r.sphere_count_used = labeled_sphere_count(n);
    r.expected_count = first_moment(n, p);
    if (n <= 7 && p > 0) r.second_moment_ratio = second_moment_ratio(n, p);
    return r;
}

ExactRatio count_variance(int n, const ExactRatio& p) {
    // E[T^2] = p^{2(2n-4)} sum_{s,s'} p^{-|s cap s'|}
    auto hist = intersection_profile(n);
    ExactRatio inv = 1 / p, sum = 0, power = 1;
    for (size_t c = 0; c < hist.size(); ++c) {
        if (hist[c]) sum += ExactRatio(static_cast<long long>(hist[c])) * power;
        power *= inv;
    }
    ExactRatio second = pow_ratio(p, 2 * (2 * n - 4)) * sum;
    ExactRatio mean = first_moment(n, p);
    return second - mean * mean;
}

IdentityCheckResult intersection_identity_check(int n, const ExactRatio& p) {
    if (n < 4 || n > 6) throw std::invalid_argument("identity check supports 4 <= n <= 6");
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0,1]");
    SphereMasks sm = sphere_masks(n);

    // left: group ordered pairs by their exact intersection
    std::map<std::uint64_t, long long> exact_count;
    for (std::uint64_t a : sm.masks)
        for (std::uint64_t b : sm.masks) ++exact_count[a & b];
    ExactRatio inv = 1 / p, lhs = 0;
    for (const auto& [f, cnt] : exact_count)
        lhs += ExactRatio(cnt) * pow_ratio(inv, __builtin_popcountll(f));

    // right: expand every intersection into all of its subsets
    std::map<std::uint64_t, long long> contain_count;
    for (std::uint64_t a : sm.masks)
        for (std::uint64_t b : sm.masks) {
            std::uint64_t inter = a & b;
            std::uint64_t sub = inter;
            while (true) {  // enumerate submasks, including 0
                ++contain_count[sub];
                if (sub == 0) break;
                sub = (sub - 1) & inter;
            }
        }
    ExactRatio q = inv - 1, rhs = 0;
    for (const auto& [f, cnt] : contain_count)
        rhs += ExactRatio(cnt) * pow_ratio(q, __builtin_popcountll(f));

    IdentityCheckResult res;
    res.lhs = lhs;
    res.rhs = rhs;
    res.verdict = (lhs == rhs) ? Verdict::Pass : Verdict::Fail;
    return res;
}

std::vector<BigCount> exact_containment_polynomial(int n, bool allow_n6) {
    if (n == 3) return {};  // no sphere on 3 vertices: P = 0
    if (n < 3 || n > (allow_n6 ? 6 : 5))
        throw std::invalid_argument("containment polynomial supports n <= 5 (6 via flag)");
    if (n == 6) return containment_polynomial_direct(6);

    SphereMasks sm = sphere_masks(n);
    const int s = static_cast<int>(sm.masks.size());
    assert(s <= 10);
    std::vector<BigCount> coeffs(sm.n_triples + 1);
    for (unsigned subset = 1; subset < (1u << s); ++subset) {
        std::uint64_t uni = 0;
        for (int i = 0; i < s; ++i)
            if ((subset >> i) & 1u) uni |= sm.masks[i];
        int sign = (__builtin_popcount(subset) % 2 == 1) ? 1 : -1;
        coeffs[__builtin_popcountll(uni)] += sign;
    }
    return coeffs;
}

std::vector<BigCount> containment_polynomial_direct(int n) {
    if (n < 3 || n > 6) throw std::invalid_argument("direct route supports 3 <= n <= 6");
    if (n == 3) return {};
    SphereMasks sm = sphere_masks(n);
    const int t = sm.n_triples;
    // N_j = number of complexes with j triangles containing some sphere
    std::vector<long long> nj(t + 1, 0);
    for (std::uint64_t c = 0; c < (1ull << t); ++c) {
        for (std::uint64_t s : sm.masks)
            if ((c & s) == s) {
                ++nj[__builtin_popcountll(c)];
                break;
            }
    }
    // P(p) = sum_j N_j p^j (1-p)^{t-j}, expanded over the monomial basis
    std::vector<BigCount> coeffs(t + 1);
    std::vector<std::vector<BigCount>> binom(t + 1, std::vector<BigCount>(t + 1));
    for (int a = 0; a <= t; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : BigCount(0));
    }
    for (int j = 0; j <= t; ++j) {
        if (!nj[j]) continue;
        for (int i = 0; i <= t - j; ++i) {
            BigCount term = BigCount(nj[j]) * binom[t - j][i];
            if (i % 2) term = -term;
            coeffs[j + i] += term;
        }
    }
    return coeffs;
}

ExactRatio eval_polynomial(const std::vector<BigCount>& coeffs, const ExactRatio& p) {
    ExactRatio acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * p + ExactRatio(coeffs[i]);
    return acc;
}

}  // namespace hamsphere
