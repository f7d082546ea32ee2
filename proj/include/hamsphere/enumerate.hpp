// Exhaustive oracles: polygon/disc triangulations, labeled sphere
// triangulations at small n, and annulus triangulations for the
// counting-injection check. These are generation-based and independent of
// the closed-form counting formulas they are used to pin down.
#pragma once

#include <optional>
#include <vector>

#include "hamsphere/complex2.hpp"
#include "hamsphere/exact.hpp"

namespace hamsphere {

// All triangulations of the disc whose boundary is the fixed polygon
// 0,1,...,m-1 (in this cyclic order) using the k labeled interior vertices
// m,...,m+k-1, all of which must appear. Simple complexes only (no loops or
// double edges). Caps: 3 <= m <= 6, 0 <= k <= 3.
std::vector<std::vector<Triangle>> enumerate_polygon_triangulations(int m, int k);

// General disc filler used internally and by the sphere enumerator:
// arbitrary boundary cycle and interior vertex set.
std::vector<std::vector<Triangle>> disc_triangulations(const std::vector<int>& cycle,
                                                       const std::vector<int>& interior);

// Independent validity check for a disc triangulation output.
bool is_disc_triangulation(const std::vector<int>& cycle, const std::vector<int>& interior,
                           std::span<const Triangle> tris);

// Every labeled triangulation of the 2-sphere on vertex set {0..n-1}.
// 4 <= n <= 7 (n = 8 only with allow_n8). n <= 6 uses filtered subset
// search; larger n decomposes along the link of vertex 0 and fills the
// complementary disc.
std::vector<Complex2> enumerate_labeled_spheres(int n, bool allow_n8 = false);

// Naive route for cross-checking the above: filter all (2n-4)-subsets of
// the C(n,3) triangles. n <= 6.
std::vector<Complex2> enumerate_labeled_spheres_subsets(int n);

// Link-of-vertex-0 route, valid for 5 <= n <= 8; used to cross-check the
// subset route where both run.
std::vector<Complex2> enumerate_labeled_spheres_links(int n);

// Annulus (sphere with two holes) triangulations: boundary cycles
// 0..m1-1 and m1..m1+m2-1, interior vertices m1+m2..m1+m2+k-1, all used.
// Caps: m1, m2 in {3,4}, k <= 2.
std::vector<std::vector<Triangle>> enumerate_annulus_triangulations(int m1, int m2, int k);

bool is_annulus_triangulation(int m1, int m2, int k, std::span<const Triangle> tris);

struct InjectionCheckResult {
    Verdict verdict = Verdict::Pass;
    ExactRatio lhs;   // [(k+m2)...(k+1)/m2] * T_{k,m1,m2} (annulus count from the oracle)
    BigCount rhs;     // T_{k+m2+1, m1} from the closed formula
    BigCount annulus_count;
};

// The counting-injection inequality behind the multi-hole estimate, checked
// exactly at small sizes: lhs <= rhs.
InjectionCheckResult injection_inequality_check(int m1, int m2, int k);

}  // namespace hamsphere
