// The X_2(n,p) sampler plus exact first/second-moment computations over the
// enumerated sphere family, the change-of-summation identity, and the exact
// containment probability polynomial at tiny n.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsphere/complex2.hpp"
#include "hamsphere/exact.hpp"

namespace hamsphere {

// Seed scheme (documented contract): per-trial seeds derive from a master
// seed via the splitmix64 finalizer,
//   trial_seed(master, i) = mix64(master + (i+1) * 0x9E3779B97F4A7C15),
// and a trial's Bernoulli draws are successive splitmix64 outputs from that
// seed, one per triangle in lexicographic triple order.
struct Seed {
    std::uint64_t master = 0;
};

std::uint64_t mix64(std::uint64_t z);
std::uint64_t trial_seed(Seed s, std::uint64_t trial_index);

// floor(p * 2^64) computed exactly from the double's mantissa.
std::uint64_t bernoulli_threshold(double p);

// Each of the C(n,3) triangles kept independently with probability p
// (draw < floor(p*2^64), p = 1 keeps everything). Deterministic in the seed.
Complex2 sample_complex(int n, double p, std::uint64_t seed);

struct MomentReport {
    int n = 0;
    ExactRatio p;
    ExactRatio expected_count;                       // |S_n| p^{2n-4}
    std::optional<ExactRatio> second_moment_ratio;   // only for n <= 7
    BigCount sphere_count_used;
};

// E[T] = |S_n| p^{2n-4}, exact. Requires n >= 4 and 0 <= p <= 1.
ExactRatio first_moment(int n, const ExactRatio& p);

// (1/|S_n|^2) sum_{s,s' in S_n} p^{-|s cap s'|}, by exhaustive ordered-pair
// enumeration. Requires 4 <= n <= 7 and 0 < p <= 1.
ExactRatio second_moment_ratio(int n, const ExactRatio& p);

// Ordered-pair counts by intersection size: hist[c] = #{(s,s') : |s cap s'| = c}.
std::vector<long long> intersection_profile(int n);

MomentReport moment_report(int n, const ExactRatio& p);

// Var T, exact (used to scale Monte Carlo tolerances).
ExactRatio count_variance(int n, const ExactRatio& p);

struct IdentityCheckResult {
    Verdict verdict = Verdict::Pass;
    ExactRatio lhs;  // sum_F p^{-|F|} #{(s,s') : F = s cap s'}
    ExactRatio rhs;  // sum_F (1/p-1)^{|F|} #{(s,s') : F subseteq s cap s'}
};

// Both sides computed by independent code paths (exact-intersection grouping
// vs. subset expansion); exact equality required. 4 <= n <= 6, 0 < p <= 1.
IdentityCheckResult intersection_identity_check(int n, const ExactRatio& p);

// Coefficients (index = power of p) of Pr[X_2(n,p) contains a spanning
// sphere], exact. n in {3,4,5}; n = 6 only with allow_n6 (direct sum over
// all 2^20 complexes instead of inclusion-exclusion).
std::vector<BigCount> exact_containment_polynomial(int n, bool allow_n6 = false);

// Cross-check route: direct sum over all 2^{C(n,3)} complexes. n <= 6.
std::vector<BigCount> containment_polynomial_direct(int n);

ExactRatio eval_polynomial(const std::vector<BigCount>& coeffs, const ExactRatio& p);

}  // namespace hamsphere
