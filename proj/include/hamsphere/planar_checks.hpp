// Machine checks of the planar lemmas over EmbeddedColoredGraph instances.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamsphere/planar_map.hpp"

namespace hamsphere {

struct PlanarEstimatesResult {
    Verdict verdict = Verdict::Pass;
    int white_faces = 0, black_faces = 0;
    int components = 0;
    int touched_sum = 0;  // sum over regions of (l_f - 1)
};

// Faces of each color at most m-2; components at most floor(m/3);
// sum (l_f - 1) at most m/3.
PlanarEstimatesResult planar_estimates_check(const EmbeddedColoredGraph& g);

struct MckayResult {
    Verdict verdict = Verdict::Pass;
    ExactRatio weighted_sum;    // L = sum over edges of min(z_i, z_j)
    ExactRatio refined_bound;   // z_2 + 2 z_3 + 3 (z_4 + ... + z_n), z sorted desc
    ExactRatio plain_bound;     // 3 sum z_i
};

// The embedding certifies planarity (build_face_structure checks genus 0).
// Weights indexed by global vertex id; all must be nonnegative.
MckayResult mckay_check(const EmbeddedColoredGraph& g, const std::vector<ExactRatio>& z);

struct BwDeficitResult {
    Verdict verdict = Verdict::Pass;
    int black = 0, white = 0;  // counts excluding the outer region
    int bound = 0;
};

// For a connected member with a chosen outer region: B - W <= floor((m-1)/2)
// when the outer region is white, B - W <= floor((m-5)/2) when black.
BwDeficitResult bw_deficit_check(const EmbeddedColoredGraph& g, int outer_region);

struct WhiteTriangleResult {
    Verdict verdict = Verdict::Pass;
    long t_gk = 0;       // total white triangles
    long c_b = 0;        // components surrounded by a white face (white outer)
    // both sides of the identity, doubled to stay integral:
    long lhs2 = 0;       // 2(m + k) - T_{G,k}
    long rhs2 = 0;       // (m + r + W - B + 3) - 2|C_B|
};

// T_{G,k} = sum over white regions of (2 k_f + sum_i m_i^f + 2 l_f - 4) and
// the identity m + k - T_{G,k}/2 = (m + r + W - B + 3)/2 - |C_B|, checked
// exactly. |C_B| uses the white-outer-face convention (see
// surrounded_component_count); allocation maps white region id -> k_f.
WhiteTriangleResult white_triangle_count(const EmbeddedColoredGraph& g,
                                         const std::vector<long>& white_allocation);

struct CayleyResult {
    Verdict verdict = Verdict::Pass;
    BigCount tree_sum;   // sum over trees of prod x_v^{deg}
    BigCount closed;     // prod x_i * (sum x_v)^{n-2}
};

// Weighted Cayley formula over all n^{n-2} labeled trees (Pruefer
// enumeration). Requires 2 <= n <= 7 and positive integer weights.
CayleyResult weighted_cayley_check(const std::vector<BigCount>& x);

}  // namespace hamsphere
