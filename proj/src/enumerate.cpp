#include "hamsphere/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace hamsphere {

namespace {

using Edge = std::array<int, 2>;

Edge mk_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// One open region of a partially filled disc: a simple boundary cycle plus
// the interior vertices that must end up inside it.
struct Region {
    std::vector<int> cycle;
    std::vector<int> interior;
};

struct DiscFiller {
    std::set<Edge> edges;            // all edges created so far
    std::vector<Triangle> current;
    std::vector<std::vector<Triangle>>* out;

    void emit() {
        std::vector<Triangle> t = current;
        std::sort(t.begin(), t.end());
        out->push_back(std::move(t));
    }

    // Fills the regions in `stack` (LIFO). Each step fills the boundary edge
    // of the top region with the lexicographically smallest vertex pair; the
    // filling triangle at that edge is unique in any completed triangulation,
    // so every final set is generated along exactly one path.
    void fill(std::vector<Region> stack) {
        if (stack.empty()) {
            emit();
            return;
        }
        Region reg = std::move(stack.back());
        stack.pop_back();
        const int m = static_cast<int>(reg.cycle.size());

        // closing triangle
        if (m == 3 && reg.interior.empty()) {
            Triangle t = make_triangle(reg.cycle[0], reg.cycle[1], reg.cycle[2]);
            if (std::find(current.begin(), current.end(), t) != current.end()) return;
            current.push_back(t);
            fill(std::move(stack));
            current.pop_back();
            return;
        }

        // smallest boundary edge of this region
        int ei = 0;
        Edge best = mk_edge(reg.cycle[0], reg.cycle[1]);
        for (int i = 1; i < m; ++i) {
            Edge e = mk_edge(reg.cycle[i], reg.cycle[(i + 1) % m]);
            if (e < best) {
                best = e;
                ei = i;
            }
        }
        const int a = reg.cycle[ei], b = reg.cycle[(ei + 1) % m];

        // candidate 1: a fresh interior vertex
        for (size_t ci = 0; ci < reg.interior.size(); ++ci) {
            int c = reg.interior[ci];
            Triangle t = make_triangle(a, b, c);
            edges.insert(mk_edge(a, c));
            edges.insert(mk_edge(b, c));
            current.push_back(t);
            Region next = reg;
            next.interior.erase(next.interior.begin() + ci);
            next.cycle.insert(next.cycle.begin() + ei + 1, c);
            std::vector<Region> st = stack;
            st.push_back(std::move(next));
            fill(std::move(st));
            current.pop_back();
            edges.erase(mk_edge(a, c));
            edges.erase(mk_edge(b, c));
        }
        if (m == 3) return;  // with interior pending, only interior placements apply

        // candidate 2: another boundary vertex (ear or split)
        for (int j = 0; j < m; ++j) {
            if (j == ei || j == (ei + 1) % m) continue;
            int c = reg.cycle[j];
            Triangle t = make_triangle(a, b, c);
            if (std::find(current.begin(), current.end(), t) != current.end()) continue;

            if (j == (ei + m - 1) % m) {  // ear at a: covers {c,a},{a,b}, creates {c,b}
                Edge fresh = mk_edge(c, b);
                if (edges.count(fresh)) continue;
                edges.insert(fresh);
                current.push_back(t);
                Region next = reg;
                next.cycle.erase(next.cycle.begin() + ei);
                std::vector<Region> st = stack;
                st.push_back(std::move(next));
                fill(std::move(st));
                current.pop_back();
                edges.erase(fresh);
            } else if (j == (ei + 2) % m) {  // ear at b
                Edge fresh = mk_edge(a, c);
                if (edges.count(fresh)) continue;
                edges.insert(fresh);
                current.push_back(t);
                Region next = reg;
                next.cycle.erase(next.cycle.begin() + (ei + 1) % m);
                std::vector<Region> st = stack;
                st.push_back(std::move(next));
                fill(std::move(st));
                current.pop_back();
                edges.erase(fresh);
            } else {  // split into [b..c] and [c..a]
                Edge e1 = mk_edge(a, c), e2 = mk_edge(b, c);
                if (edges.count(e1) || edges.count(e2)) continue;
                // walk the cycle from b to c and from c to a
                std::vector<int> cyc1, cyc2;
                for (int p = (ei + 1) % m; p != j; p = (p + 1) % m) cyc1.push_back(reg.cycle[p]);
                cyc1.push_back(c);
                for (int p = j; p != ei; p = (p + 1) % m) cyc2.push_back(reg.cycle[p]);
                cyc2.push_back(a);
                edges.insert(e1);
                edges.insert(e2);
                current.push_back(t);
                // branch over interior partitions between the two sub-regions
                const int ni = static_cast<int>(reg.interior.size());
                for (unsigned mask = 0; mask < (1u << ni); ++mask) {
                    Region r1{cyc1, {}}, r2{cyc2, {}};
                    for (int q = 0; q < ni; ++q)
                        ((mask >> q) & 1u ? r1 : r2).interior.push_back(reg.interior[q]);
                    std::vector<Region> st = stack;
                    st.push_back(std::move(r1));
                    st.push_back(std::move(r2));
                    fill(std::move(st));
                }
                current.pop_back();
                edges.erase(e1);
                edges.erase(e2);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<Triangle>> disc_triangulations(const std::vector<int>& cycle,
                                                       const std::vector<int>& interior) {
    if (cycle.size() < 3) throw std::invalid_argument("boundary cycle needs >= 3 vertices");
    std::vector<std::vector<Triangle>> out;
    DiscFiller f;
    f.out = &out;
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) f.edges.insert(mk_edge(cycle[i], cycle[(i + 1) % m]));
    f.fill({Region{cycle, interior}});
    // duplicates are impossible by the forced-edge argument; assert anyway
    std::set<std::vector<Triangle>> dedup(out.begin(), out.end());
    assert(dedup.size() == out.size());
    return out;
}

std::vector<std::vector<Triangle>> enumerate_polygon_triangulations(int m, int k) {
    if (m < 3 || m > 6 || k < 0 || k > 3)
        throw std::invalid_argument("polygon enumeration caps: 3 <= m <= 6, 0 <= k <= 3");
    std::vector<int> cycle(m), interior(k);
    for (int i = 0; i < m; ++i) cycle[i] = i;
    for (int i = 0; i < k; ++i) interior[i] = m + i;
    return disc_triangulations(cycle, interior);
}

bool is_disc_triangulation(const std::vector<int>& cycle, const std::vector<int>& interior,
                           std::span<const Triangle> tris) {
    const int m = static_cast<int>(cycle.size());
    std::set<Edge> boundary;
    for (int i = 0; i < m; ++i) boundary.insert(mk_edge(cycle[i], cycle[(i + 1) % m]));
    std::map<Edge, int> deg;
    std::set<int> used;
    for (const Triangle& t : tris) {
        ++deg[mk_edge(t.v[0], t.v[1])];
        ++deg[mk_edge(t.v[0], t.v[2])];
        ++deg[mk_edge(t.v[1], t.v[2])];
        used.insert(t.v.begin(), t.v.end());
    }
    // boundary edges once, interior edges twice
    for (const Edge& e : boundary)
        if (!deg.count(e) || deg[e] != 1) return false;
    for (const auto& [e, d] : deg)
        if (!boundary.count(e) && d != 2) return false;
    // all interior vertices used, no stray vertices
    std::set<int> expect(cycle.begin(), cycle.end());
    expect.insert(interior.begin(), interior.end());
    for (int v : interior)
        if (!used.count(v)) return false;
    for (int v : used)
        if (!expect.count(v)) return false;
    // Euler characteristic of a disc
    int chi = static_cast<int>(used.size()) - static_cast<int>(deg.size()) +
              static_cast<int>(tris.size());
    if (chi != 1) return false;
    // links: boundary vertices give paths, interior vertices give cycles
    std::map<int, std::vector<Edge>> links;
    for (const Triangle& t : tris) {
        links[t.v[0]].push_back(mk_edge(t.v[1], t.v[2]));
        links[t.v[1]].push_back(mk_edge(t.v[0], t.v[2]));
        links[t.v[2]].push_back(mk_edge(t.v[0], t.v[1]));
    }
    std::set<int> boundary_set(cycle.begin(), cycle.end());
    for (const auto& [v, le] : links) {
        std::map<int, int> d2;
        for (const Edge& e : le) {
            ++d2[e[0]];
            ++d2[e[1]];
        }
        int odd = 0;
        for (const auto& [u, dd] : d2) {
            if (dd > 2) return false;
            if (dd == 1) ++odd;
        }
        // connectivity of the link: edges must form a single path/cycle
        std::set<int> lseen;
        std::vector<int> lstack{le[0][0]};
        std::map<int, std::vector<int>> ladj;
        for (const Edge& e : le) {
            ladj[e[0]].push_back(e[1]);
            ladj[e[1]].push_back(e[0]);
        }
        while (!lstack.empty()) {
            int u = lstack.back();
            lstack.pop_back();
            if (!lseen.insert(u).second) continue;
            for (int w : ladj[u]) lstack.push_back(w);
        }
        if (lseen.size() != d2.size()) return false;
        if (boundary_set.count(v)) {
            if (odd != 2) return false;
        } else {
            if (odd != 0) return false;
        }
    }
    return true;
}

namespace {

std::vector<Triangle> all_triples(int n) {
    std::vector<Triangle> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) all.push_back(Triangle{{i, j, k}});
    return all;
}

}  // namespace

std::vector<Complex2> enumerate_labeled_spheres_subsets(int n) {
    if (n < 4 || n > 6) throw std::invalid_argument("subset enumeration supports 4 <= n <= 6");
    const auto all = all_triples(n);
    const int total = static_cast<int>(all.size());
    const int want = 2 * n - 4;
    std::vector<Complex2> out;
    std::vector<int> pick;
    std::map<Edge, int> deg;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == want) {
            std::vector<Triangle> tris;
            for (int idx : pick) tris.push_back(all[idx]);
            if (is_spanning_sphere(n, tris)) out.push_back(make_complex(n, tris));
            return;
        }
        int need = want - static_cast<int>(pick.size());
        for (int i = from; i + need <= total; ++i) {
            const Triangle& t = all[i];
            Edge e0 = mk_edge(t.v[0], t.v[1]), e1 = mk_edge(t.v[0], t.v[2]),
                 e2 = mk_edge(t.v[1], t.v[2]);
            if (deg[e0] >= 2 || deg[e1] >= 2 || deg[e2] >= 2) continue;
            ++deg[e0];
            ++deg[e1];
            ++deg[e2];
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
            --deg[e0];
            --deg[e1];
            --deg[e2];
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Complex2> enumerate_labeled_spheres_links(int n) {
    if (n < 5 || n > 8) throw std::invalid_argument("link enumeration supports 5 <= n <= 8");
    std::vector<Complex2> out;
    const int rest = n - 1;  // vertices 1..n-1
    // choose the link of vertex 0: a cycle on a subset S of {1..n-1}
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rest; ++i)
            if ((mask >> i) & 1u) s.push_back(i + 1);
        const int d = static_cast<int>(s.size());
        if (d < 3) continue;
        std::vector<int> interior;
        for (int i = 0; i < rest; ++i)
            if (!((mask >> i) & 1u)) interior.push_back(i + 1);
        // distinct cycles on s: fix s[0] first, quotient reflections
        std::vector<int> perm(s.begin() + 1, s.end());
        std::sort(perm.begin(), perm.end());
        do {
            if (d > 2 && perm.front() > perm.back()) continue;  // reflection
            std::vector<int> cycle{s[0]};
            cycle.insert(cycle.end(), perm.begin(), perm.end());
            std::vector<Triangle> star;
            for (int i = 0; i < d; ++i)
                star.push_back(make_triangle(0, cycle[i], cycle[(i + 1) % d]));
            for (auto& disc : disc_triangulations(cycle, interior)) {
                std::vector<Triangle> tris = star;
                tris.insert(tris.end(), disc.begin(), disc.end());
                out.push_back(make_complex(n, std::move(tris)));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::vector<Complex2> enumerate_labeled_spheres(int n, bool allow_n8) {
    int cap = allow_n8 ? 8 : 7;
    if (n < 4 || n > cap)
        throw std::invalid_argument("sphere enumeration supports 4 <= n <= " +
                                    std::to_string(cap));
    if (n <= 6) return enumerate_labeled_spheres_subsets(n);
    return enumerate_labeled_spheres_links(n);
}

namespace {

// Generic surface filler used for the annulus: repeatedly completes the
// smallest open edge. Boundary edges carry capacity 1, interior edges 2.
struct AnnulusFiller {
    int n_vertices = 0;
    int target = 0;  // exact triangle count of a valid filling
    std::set<Edge> boundary;
    std::map<Edge, int> deg;
    std::vector<Triangle> current;
    std::set<int> used;
    int unused_interior = 0;
    std::vector<std::vector<Triangle>>* out = nullptr;
    int m1 = 0, m2 = 0, k = 0;

    int cap(const Edge& e) const { return boundary.count(e) ? 1 : 2; }

    std::optional<Edge> smallest_open() const {
        std::optional<Edge> best;
        for (const auto& [e, d] : deg)
            if (d < cap(e) && (!best || e < *best)) best = e;
        return best;
    }

    void run() {
        auto open = smallest_open();
        if (!open) {
            if (static_cast<int>(current.size()) == target &&
                is_annulus_triangulation(m1, m2, k, current)) {
                std::vector<Triangle> t = current;
                std::sort(t.begin(), t.end());
                out->push_back(std::move(t));
            }
            return;
        }
        if (static_cast<int>(current.size()) >= target) return;
        // every open edge still needs a triangle; each new triangle closes <= 3
        int open_count = 0;
        for (const auto& [e, d] : deg)
            if (d < cap(e)) ++open_count;
        int left = target - static_cast<int>(current.size());
        if (open_count > 3 * left) return;
        if (unused_interior > left) return;

        const auto [a, b] = *open;
        for (int c = 0; c < n_vertices; ++c) {
            if (c == a || c == b) continue;
            Triangle t = make_triangle(a, b, c);
            if (std::find(current.begin(), current.end(), t) != current.end()) continue;
            Edge e1 = mk_edge(a, c), e2 = mk_edge(b, c);
            auto it1 = deg.find(e1), it2 = deg.find(e2);
            if (it1 != deg.end() && it1->second >= cap(e1)) continue;
            if (it2 != deg.end() && it2->second >= cap(e2)) continue;

            bool fresh = !used.count(c);
            if (fresh) --unused_interior, used.insert(c);
            ++deg[*open];
            ++deg[e1];
            ++deg[e2];
            current.push_back(t);
            run();
            current.pop_back();
            auto dec = [&](const Edge& e) {
                auto it = deg.find(e);
                if (--it->second == 0 && !boundary.count(e)) deg.erase(it);
            };
            dec(*open);
            dec(e1);
            dec(e2);
            if (fresh) ++unused_interior, used.erase(c);
        }
    }
};

}  // namespace

bool is_annulus_triangulation(int m1, int m2, int k, std::span<const Triangle> tris) {
    const int n = m1 + m2 + k;
    std::set<Edge> boundary;
    for (int i = 0; i < m1; ++i) boundary.insert(mk_edge(i, (i + 1) % m1));
    for (int i = 0; i < m2; ++i) boundary.insert(mk_edge(m1 + i, m1 + (i + 1) % m2));

    std::map<Edge, int> deg;
    std::set<int> used;
    for (const Triangle& t : tris) {
        ++deg[mk_edge(t.v[0], t.v[1])];
        ++deg[mk_edge(t.v[0], t.v[2])];
        ++deg[mk_edge(t.v[1], t.v[2])];
        used.insert(t.v.begin(), t.v.end());
        if (t.v[2] >= n) return false;
    }
    for (const Edge& e : boundary)
        if (!deg.count(e) || deg[e] != 1) return false;
    for (const auto& [e, d] : deg)
        if (!boundary.count(e) && d != 2) return false;
    if (static_cast<int>(used.size()) != n) return false;
    int chi = n - static_cast<int>(deg.size()) + static_cast<int>(tris.size());
    if (chi != 0) return false;
    // link conditions: boundary vertices give paths, interior vertices cycles
    std::map<int, std::vector<Edge>> links;
    for (const Triangle& t : tris) {
        links[t.v[0]].push_back(mk_edge(t.v[1], t.v[2]));
        links[t.v[1]].push_back(mk_edge(t.v[0], t.v[2]));
        links[t.v[2]].push_back(mk_edge(t.v[0], t.v[1]));
    }
    for (const auto& [v, le] : links) {
        std::map<int, int> d2;
        std::map<int, std::vector<int>> ladj;
        for (const Edge& e : le) {
            ++d2[e[0]];
            ++d2[e[1]];
            ladj[e[0]].push_back(e[1]);
            ladj[e[1]].push_back(e[0]);
        }
        int odd = 0;
        for (const auto& [u, dd] : d2) {
            if (dd > 2) return false;
            if (dd == 1) ++odd;
        }
        std::set<int> lseen;
        std::vector<int> lstack{le[0][0]};
        while (!lstack.empty()) {
            int u = lstack.back();
            lstack.pop_back();
            if (!lseen.insert(u).second) continue;
            for (int w : ladj[u]) lstack.push_back(w);
        }
        if (lseen.size() != d2.size()) return false;
        if (v < m1 + m2) {
            if (odd != 2) return false;
        } else {
            if (odd != 0) return false;
        }
    }
    // connectivity of the whole complex
    std::map<int, std::vector<int>> adj;
    for (const auto& [e, d] : deg) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<int> seen;
    std::vector<int> stack{*used.begin()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        for (int w : adj[u]) stack.push_back(w);
    }
    return seen.size() == used.size();
}

std::vector<std::vector<Triangle>> enumerate_annulus_triangulations(int m1, int m2, int k) {
    if ((m1 != 3 && m1 != 4) || (m2 != 3 && m2 != 4) || k < 0 || k > 2)
        throw std::invalid_argument("annulus caps: m1,m2 in {3,4}, 0 <= k <= 2");
    std::vector<std::vector<Triangle>> out;
    AnnulusFiller f;
    f.n_vertices = m1 + m2 + k;
    f.target = 2 * k + m1 + m2;  // 2k + sum m_i + 2l - 4 with l = 2
    f.m1 = m1;
    f.m2 = m2;
    f.k = k;
    f.out = &out;
    for (int i = 0; i < m1; ++i) {
        Edge e = mk_edge(i, (i + 1) % m1);
        f.boundary.insert(e);
        f.deg[e] = 0;
    }
    for (int i = 0; i < m2; ++i) {
        Edge e = mk_edge(m1 + i, m1 + (i + 1) % m2);
        f.boundary.insert(e);
        f.deg[e] = 0;
    }
    for (int i = 0; i < m1 + m2; ++i) f.used.insert(i);
    f.unused_interior = k;
    f.run();
    std::set<std::vector<Triangle>> dedup(out.begin(), out.end());
    assert(dedup.size() == out.size());
    return out;
}

InjectionCheckResult injection_inequality_check(int m1, int m2, int k) {
    InjectionCheckResult r;
    r.annulus_count = static_cast<long>(enumerate_annulus_triangulations(m1, m2, k).size());
    ExactRatio falling = 1;
    for (int i = 1; i <= m2; ++i) falling *= k + i;  // (k+m2)(k+m2-1)...(k+1)
    r.lhs = falling / m2 * ExactRatio(r.annulus_count);
    r.rhs = polygon_triangulation_count(k + m2 + 1, m1);
    r.verdict = (r.lhs <= ExactRatio(r.rhs)) ? Verdict::Pass : Verdict::Fail;
    return r;
}

}  // namespace hamsphere
