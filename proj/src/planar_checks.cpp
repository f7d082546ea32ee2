#include "hamsphere/planar_checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hamsphere {

PlanarEstimatesResult planar_estimates_check(const EmbeddedColoredGraph& g) {
    FaceStructure fs = build_face_structure(g);
    PlanarEstimatesResult r;
    r.components = g.component_count();
    for (const auto& reg : fs.regions) {
        (reg.color == FaceColor::White ? r.white_faces : r.black_faces) += 1;
        r.touched_sum += reg.boundary_components() - 1;
    }
    const int m = g.m;
    bool ok = r.white_faces <= m - 2 && r.black_faces <= m - 2 &&
              r.components <= m / 3 && 3 * r.touched_sum <= m;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return r;
}

MckayResult mckay_check(const EmbeddedColoredGraph& g, const std::vector<ExactRatio>& z) {
    if (static_cast<int>(z.size()) != g.m)
        throw std::invalid_argument("weight vector length must equal the vertex count");
    for (const auto& w : z)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    build_face_structure(g);  // certifies the embedding (genus 0 per component)

    MckayResult r;
    r.weighted_sum = 0;
    for (const auto& comp : g.comps)
        for (const auto& [v, nb] : comp.rot)
            for (int u : nb)
                if (v < u) r.weighted_sum += std::min(z[v], z[u]);

    std::vector<ExactRatio> sorted = z;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    r.refined_bound = 0;
    ExactRatio total = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        total += sorted[i];
        long coeff = (i == 0) ? 0 : (i == 1) ? 1 : (i == 2) ? 2 : 3;
        r.refined_bound += coeff * sorted[i];
    }
    r.plain_bound = 3 * total;
    r.verdict = (r.weighted_sum <= r.refined_bound && r.refined_bound <= r.plain_bound)
                    ? Verdict::Pass
                    : Verdict::Fail;
    return r;
}

BwDeficitResult bw_deficit_check(const EmbeddedColoredGraph& g, int outer_region) {
    if (g.component_count() != 1)
        throw std::invalid_argument("deficit bound applies to connected members");
    FaceStructure fs = build_face_structure(g);
    if (outer_region < 0 || outer_region >= static_cast<int>(fs.regions.size()))
        throw std::invalid_argument("outer region index out of range");
    BwDeficitResult r;
    for (int i = 0; i < static_cast<int>(fs.regions.size()); ++i) {
        if (i == outer_region) continue;
        (fs.regions[i].color == FaceColor::Black ? r.black : r.white) += 1;
    }
    const int m = g.m;
    // floor division that stays correct for negative numerators
    auto floor_div2 = [](int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); };
    r.bound = (fs.regions[outer_region].color == FaceColor::White) ? floor_div2(m - 1)
                                                                   : floor_div2(m - 5);
    r.verdict = (r.black - r.white <= r.bound) ? Verdict::Pass : Verdict::Fail;
    return r;
}

WhiteTriangleResult white_triangle_count(const EmbeddedColoredGraph& g,
                                         const std::vector<long>& white_allocation) {
    FaceStructure fs = build_face_structure(g);
    WhiteTriangleResult r;
    int W = 0, B = 0;
    long k_total = 0;
    size_t widx = 0;
    for (const auto& reg : fs.regions) {
        if (reg.color == FaceColor::Black) {
            ++B;
            continue;
        }
        ++W;
        if (widx >= white_allocation.size())
            throw std::invalid_argument("allocation must cover every white region");
        long kf = white_allocation[widx++];
        if (kf < 0) throw std::invalid_argument("negative interior allocation");
        k_total += kf;
        long mf = 0;
        for (int lf : reg.local_faces) mf += fs.faces[lf].edge_incidences();
        long lf_count = reg.boundary_components();
        long tri = 2 * kf + mf + 2 * lf_count - 4;
        if (tri < 1)
            throw std::invalid_argument("white region fails the triangulability shape");
        r.t_gk += tri;
    }
    if (widx != white_allocation.size())
        throw std::invalid_argument("allocation longer than the white region list");

    r.c_b = surrounded_component_count(fs, FaceColor::White);
    const long m = g.m, rr = g.component_count();
    r.lhs2 = 2 * (m + k_total) - r.t_gk;
    r.rhs2 = (m + rr + W - B + 3) - 2 * r.c_b;
    r.verdict = (r.lhs2 == r.rhs2) ? Verdict::Pass : Verdict::Fail;
    return r;
}

namespace {

BigCount pow_big(const BigCount& x, int e) {
    BigCount r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

CayleyResult weighted_cayley_check(const std::vector<BigCount>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2 || n > 7) throw std::invalid_argument("tree enumeration supports 2 <= n <= 7");
    for (const auto& w : x)
        if (w <= 0) throw std::invalid_argument("weights must be positive");

    CayleyResult r;
    r.tree_sum = 0;
    // every tree on n labeled vertices corresponds to a Pruefer sequence in
    // [n]^{n-2}; vertex degree = multiplicity in the sequence + 1
    std::vector<int> seq(std::max(n - 2, 0), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n - 2) {
            BigCount term = 1;
            std::vector<int> deg(n, 1);
            for (int s : seq) ++deg[s];
            for (int v = 0; v < n; ++v) term *= pow_big(x[v], deg[v]);
            r.tree_sum += term;
            return;
        }
        for (int v = 0; v < n; ++v) {
            seq[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    BigCount sum = 0, prod = 1;
    for (const auto& w : x) {
        sum += w;
        prod *= w;
    }
    r.closed = prod * pow_big(sum, n - 2);
    r.verdict = (r.tree_sum == r.closed) ? Verdict::Pass : Verdict::Fail;
    return r;
}

}  // namespace hamsphere
